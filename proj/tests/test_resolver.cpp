#include <random>

#include "doctest.h"
#include "mbasis/corpus.hpp"
#include "mbasis/errors.hpp"
#include "mbasis/resolver.hpp"
#include "oracles.hpp"

using namespace mbasis;

TEST_SUITE("resolver") {
  TEST_CASE("pair system cover masks match distances") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
      const Graph g = random_connected_graph(rng, 3 + i % 10, 0.4);
      const auto dm = distance_matrix(g);
      const PairSystem ps = PairSystem::build(dm);
      REQUIRE(ps.pair_count() == g.order() * (g.order() - 1) / 2);
      for (std::size_t p = 0; p < ps.pair_count(); ++p) {
        const auto [x, y] = ps.pair(p);
        REQUIRE(ps.pair_index(x, y) == p);
        for (Vertex w = 0; w < g.order(); ++w) REQUIRE(ps.covers(w, p) == (dm(w, x) != dm(w, y)));
      }
    }
  }

  TEST_CASE("known dimensions") {
    CHECK(analyze(path_graph(7)).dim == 1);
    CHECK(analyze(cycle_graph(7)).dim == 2);
    CHECK(analyze(complete_graph(6)).dim == 5);
    CHECK(analyze(star_graph(5)).dim == 4);
    // Petersen graph
    const Graph petersen = Graph::from_edge_list(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(analyze(petersen).dim == 3);
  }

  TEST_CASE("paths: both ends are the only bases") {
    const auto a = analyze(path_graph(6));
    CHECK(a.bases == std::vector<VertexSet>{{0}, {5}});
    CHECK(a.classification.flexible == VertexSet{0, 5});
    CHECK(a.classification.void_vertices.size() == 4);
  }

  TEST_CASE("dimension and bases match exhaustive search") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
      const Graph g = random_connected_graph(rng, 2 + i % 8, 0.2 + 0.002 * i);
      const auto a = analyze(g);
      REQUIRE(a.dim == oracle::metric_dimension(g));
      REQUIRE(a.bases == oracle::metric_bases(g));
    }
  }

  TEST_CASE("results do not depend on the thread count") {
    const auto corpus = random_connected_corpus(40, 9, 14, 5);
    for (const Graph& g : corpus) {
      SearchBudget one, many;
      many.threads = 4;
      const auto a = analyze(g, one);
      const auto b = analyze(g, many);
      REQUIRE(a.dim == b.dim);
      REQUIRE(a.bases == b.bases);
    }
  }

  TEST_CASE("has_resolving_set_of_size is monotone at the dimension") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
      const Graph g = random_connected_graph(rng, 4 + i % 6, 0.5);
      const auto dm = distance_matrix(g);
      const auto ps = PairSystem::build(dm);
      const auto tc = twin_classes(g);
      const std::size_t d = metric_dimension(ps, tc);
      CHECK(has_resolving_set_of_size(ps, tc, d));
      CHECK_FALSE(has_resolving_set_of_size(ps, tc, d - 1));
      CHECK(twin_lower_bound(tc) <= d);
    }
  }

  TEST_CASE("is_resolving and unresolved pairs") {
    const auto dm = distance_matrix(cycle_graph(6));
    CHECK(is_resolving(dm, std::vector<Vertex>{0, 1}));
    CHECK_FALSE(is_resolving(dm, std::vector<Vertex>{0, 3}));
    const auto bad = unresolved_pairs(dm, std::vector<Vertex>{0});
    CHECK(bad == std::vector<std::pair<Vertex, Vertex>>{{1, 5}, {2, 4}});
    const auto ps = PairSystem::build(dm);
    CHECK(ps.unresolved_pairs(std::vector<Vertex>{0}) == bad);
  }

  TEST_CASE("classification and replace") {
    const std::vector<VertexSet> bases{{0, 1}, {0, 2}};
    const auto c = classify_vertices(bases, 4);
    CHECK(c.basis_forced == VertexSet{0});
    CHECK(c.flexible == VertexSet{1, 2});
    CHECK(c.void_vertices == VertexSet{3});
    CHECK(std::string(to_string(c.of[3])) == "void");
    CHECK_THROWS_AS(classify_vertices(std::span<const VertexSet>{}, 3), std::invalid_argument);
    CHECK(replace(std::vector<Vertex>{0, 2}, 2, 1) == VertexSet{0, 1});
    CHECK_THROWS_AS(replace(std::vector<Vertex>{0, 2}, 1, 3), std::invalid_argument);
  }

  TEST_CASE("input errors") {
    CHECK_THROWS_AS(analyze(Graph(3)), DisconnectedGraph);
    CHECK_THROWS_AS(analyze(Graph(1)), UnsupportedInput);
    CHECK_THROWS_AS(analyze(path_graph(65)), UnsupportedInput);
  }

  TEST_CASE("budget exhaustion reports bounds") {
    std::mt19937_64 rng(41);
    const Graph g = random_connected_graph(rng, 40, 0.3);
    SearchBudget tiny;
    tiny.max_nodes = 5;
    try {
      analyze(g, tiny);
      FAIL("expected SearchBudgetExceeded");
    } catch (const SearchBudgetExceeded& e) {
      CHECK(e.lower_bound() <= e.upper_bound());
    }
  }
}
