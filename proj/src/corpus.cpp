#include "mbasis/corpus.hpp"

#include <map>
#include <stdexcept>

#include "mbasis/canonical.hpp"

namespace mbasis {

std::vector<Graph> all_graphs(std::size_t n) {
  if (n == 0) return {Graph(0)};
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<CanonicalForm, Graph> next;
    const auto last = static_cast<Vertex>(k - 1);
    for (const Graph& g : level) {
      const std::vector<Edge> base = g.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        std::vector<Edge> edges = base;
        for (Vertex v = 0; v < last; ++v) {
          if ((mask >> v) & 1u) edges.push_back({v, last});
        }
        Graph h = Graph::from_edge_list(k, edges);
        const CanonicalForm cf = canonical_form(h);
        next.try_emplace(cf, std::move(h));
      }
    }
    level.clear();
    for (auto& [cf, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  if (n == 0) throw std::invalid_argument("random_connected_graph: n must be positive");
  if (!(p > 0.0) && n > 1) throw std::invalid_argument("random_connected_graph: p must be positive");
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (unit_double(rng) < p) edges.push_back({u, v});
      }
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (is_connected(g)) return g;
  }
}

std::vector<Graph> random_connected_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                           std::uint64_t seed, double p_lo, double p_hi) {
  if (min_n == 0 || min_n > max_n) throw std::invalid_argument("random_connected_corpus: bad order range");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = min_n + static_cast<std::size_t>(rng() % (max_n - min_n + 1));
    const double p = p_lo + (p_hi - p_lo) * unit_double(rng);
    out.push_back(random_connected_graph(rng, n, p));
  }
  return out;
}

Graph random_unicyclic_graph(std::mt19937_64& rng, std::size_t n) {
  if (n < 3) throw std::invalid_argument("random_unicyclic_graph: n must be at least 3");
  // Decode a random Pruefer sequence.
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, c});
    --degree[leaf];
    --degree[c];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex v = u + 1;
  while (degree[v] != 1) ++v;
  edges.push_back({u, v});
  const Graph tree = Graph::from_edge_list(n, edges);
  for (;;) {
    const auto x = static_cast<Vertex>(rng() % n);
    const auto y = static_cast<Vertex>(rng() % n);
    if (x != y && !tree.adjacent(x, y)) {
      edges.push_back({x, y});
      return Graph::from_edge_list(n, edges);
    }
  }
}

}  // namespace mbasis
