#include <map>
#include <random>

#include "doctest.h"
#include "mbasis/colour_graph.hpp"
#include "mbasis/constructions.hpp"
#include "mbasis/corpus.hpp"
#include "mbasis/resolver.hpp"
#include "oracles.hpp"

using namespace mbasis;

namespace {

// U_R(r) straight from the definition: r separates x,y and no other member does.
std::vector<ColourEdge> brute_colour_edges(const Graph& g, const VertexSet& r) {
  const auto d = oracle::floyd_warshall(g);
  std::vector<ColourEdge> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      std::vector<Vertex> sep;
      for (Vertex t : r) {
        if (d[t][x] != d[t][y]) sep.push_back(t);
      }
      if (sep.size() == 1) out.push_back({x, y, sep[0]});
    }
  }
  return out;
}

// Every simple cycle uses each of its colours zero or at least two times.
bool cycles_never_use_a_colour_once(const ColourGraph& cg) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& e : cg.edges()) es.push_back({e.x, e.y});
  for (const auto& cyc : oracle::simple_cycles(cg.order(), es)) {
    std::map<Vertex, int> count;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      ++count[*cg.colour(cyc[i], cyc[(i + 1) % cyc.size()])];
    }
    for (const auto& [c, k] : count) {
      if (k == 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("colour_graph") {
  TEST_CASE("worked example: two reference vertices, four edges per colour") {
    const Graph g = named_graph("fig7");
    const Vertex r1 = g.at("r1"), r2 = g.at("r2"), v1 = g.at("v1"), v2 = g.at("v2"), v3 = g.at("v3"),
                 v4 = g.at("v4");
    const auto cg = build_colour_graph(distance_matrix(g), std::vector<Vertex>{r1, r2});
    CHECK(cg.resolving());
    CHECK(cg.edges().size() == 8);
    CHECK(cg.colour(r1, v1) == r1);
    CHECK(cg.colour(r1, v3) == r1);
    CHECK(cg.colour(v1, v3) == r1);
    CHECK(cg.colour(v2, v4) == r1);
    CHECK(cg.colour(r2, v1) == r2);
    CHECK(cg.colour(r2, v2) == r2);
    CHECK(cg.colour(v1, v2) == r2);
    CHECK(cg.colour(v3, v4) == r2);
    CHECK_FALSE(cg.colour(r1, r2));

    auto comps = monochromatic_components(cg, r1);
    std::sort(comps.begin(), comps.end());
    CHECK(comps == std::vector<VertexSet>{make_vertex_set({r1, v1, v3}), make_vertex_set({v2, v4})});
  }

  TEST_CASE("edges match the definition on random graphs and sets") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
      const Graph g = random_connected_graph(rng, 3 + i % 9, 0.35);
      std::vector<Vertex> pick;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (unit_double(rng) < 0.3) pick.push_back(v);
      }
      if (pick.empty()) pick.push_back(0);
      const VertexSet r = make_vertex_set(pick);
      const auto cg = build_colour_graph(distance_matrix(g), r);
      REQUIRE(cg.edges() == brute_colour_edges(g, r));
      REQUIRE(cg.resolving() == oracle::resolves(oracle::floyd_warshall(g), r));
    }
  }

  TEST_CASE("cycle property agrees with full cycle enumeration") {
    std::mt19937_64 rng(47);
    int nontrivial = 0;
    for (int i = 0; i < 150; ++i) {
      const Graph g = random_connected_graph(rng, 4 + i % 5, 0.4);
      const auto a = analyze(g);
      for (const auto& b : a.bases) {
        const auto cg = build_colour_graph(distance_matrix(g), b);
        const bool oracle_ok = cycles_never_use_a_colour_once(cg);
        REQUIRE(check_cycle_property(cg).passed == oracle_ok);
        nontrivial += cg.edges().size() >= 3;
      }
    }
    CHECK(nontrivial > 0);
  }

  TEST_CASE("basis statements hold on every basis of small graphs") {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (const Graph& g : all_connected_graphs(n)) {
        const auto a = analyze(g);
        const auto dm = distance_matrix(g);
        for (const auto& b : a.bases) {
          const auto cg = build_colour_graph(dm, b);
          REQUIRE(check_transitivity(cg).passed);
          REQUIRE(check_every_colour_present(cg).passed);
          REQUIRE(check_reference_independent(cg).passed);
          REQUIRE(check_incident_colours(cg).passed);
          REQUIRE(check_forced_colour_counts(cg, a.classification.basis_forced).passed);
          REQUIRE(check_forced_outside_edges(cg, a.classification.basis_forced).passed);
          for (Vertex r : b) CHECK_NOTHROW(monochromatic_components(cg, r));
        }
      }
    }
  }

  TEST_CASE("forced-vertex checks report a vertex that does not qualify") {
    const auto cg = build_colour_graph(distance_matrix(path_graph(2)), std::vector<Vertex>{0});
    const auto counts = check_forced_colour_counts(cg, std::vector<Vertex>{0});
    CHECK_FALSE(counts.passed);
    CHECK(counts.witness == std::vector<Vertex>{0});
    CHECK_FALSE(check_forced_outside_edges(cg, std::vector<Vertex>{0}).passed);
  }

  TEST_CASE("unresolved pairs get no edge and transitivity refuses them") {
    const Graph g = cycle_graph(6);
    const auto cg = build_colour_graph(distance_matrix(g), std::vector<Vertex>{0});
    CHECK_FALSE(cg.resolving());
    CHECK_FALSE(cg.colour(1, 5));
    CHECK_THROWS_AS(check_transitivity(cg), std::invalid_argument);
    CHECK_THROWS_AS(build_colour_graph(distance_matrix(g), std::vector<Vertex>{}), std::invalid_argument);
  }

  TEST_CASE("whole vertex set of a complete graph gives no edges") {
    const Graph g = complete_graph(5);
    const auto cg = build_colour_graph(distance_matrix(g), std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(cg.edges().empty());
  }

  TEST_CASE("dot export colours every reference vertex") {
    const Graph g = named_graph("fig7");
    const auto cg = build_colour_graph(distance_matrix(g), std::vector<Vertex>{g.at("r1"), g.at("r2")});
    const std::string dot = colour_graph_to_dot(cg, g);
    CHECK(dot.find("r1") != std::string::npos);
    CHECK(dot.find("color") != std::string::npos);
  }
}
