#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mbasis/graph.hpp"

namespace mbasis {

/// All graphs on n vertices up to isomorphism, ordered by canonical code.
/// Built by adding a vertex to every graph on n-1 vertices in all possible
/// ways and keeping one graph per canonical form. n <= 9 is practical.
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> all_connected_graphs(std::size_t n);

/// Uniform double in [0,1) from the top 53 bits, identical on every platform.
double unit_double(std::mt19937_64& rng);

/// G(n,p) conditioned on being connected (rejection sampling).
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p);

/// `count` connected graphs with n uniform in [min_n, max_n] and p uniform in
/// [p_lo, p_hi]. Deterministic in the seed.
std::vector<Graph> random_connected_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                           std::uint64_t seed, double p_lo = 0.2, double p_hi = 0.8);

/// Random labelled tree (uniform Pruefer code) plus one extra edge.
Graph random_unicyclic_graph(std::mt19937_64& rng, std::size_t n);

}  // namespace mbasis
