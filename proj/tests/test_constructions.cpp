#include <random>

#include "doctest.h"
#include "mbasis/canonical.hpp"
#include "mbasis/constructions.hpp"
#include "mbasis/corpus.hpp"
#include "mbasis/errors.hpp"
#include "mbasis/resolver.hpp"
#include "oracles.hpp"

using namespace mbasis;

namespace {

VertexSet by_label(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<Vertex> out;
  for (const char* s : names) out.push_back(g.at(s));
  return make_vertex_set(out);
}

std::size_t c2(std::size_t n) { return n * (n - 1) / 2; }

ConstructionError::Kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConstructionError& e) {
    return e.kind();
  }
  FAIL("no ConstructionError thrown");
  return ConstructionError::Kind::BadParameter;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("catalogue graphs are connected and labelled") {
    for (const auto& key : named_graph_keys()) {
      const Graph g = named_graph(key);
      CHECK(is_connected(g));
      CHECK(g.has_labels());
    }
    CHECK(kind_of([] { named_graph("nope"); }) == ConstructionError::Kind::UnknownName);
  }

  TEST_CASE("catalogue bases") {
    const Graph g4 = named_graph("fig4");
    CHECK(analyze(g4).bases ==
          std::vector<VertexSet>{by_label(g4, {"v2", "v5"}), by_label(g4, {"v3", "v6"}), by_label(g4, {"v5", "v6"})});

    const Graph g1b = named_graph("fig1b");
    const auto a1b = analyze(g1b);
    REQUIRE(a1b.bases.size() == 1);
    CHECK(a1b.bases[0] == by_label(g1b, {"p2", "p6"}));
    for (Vertex v : a1b.bases[0]) CHECK(g1b.degree(v) == 1);

    const Graph g2a = named_graph("fig2a");
    CHECK(analyze(g2a).bases == std::vector<VertexSet>{by_label(g2a, {"u", "v1", "v2"}),
                                                       by_label(g2a, {"u", "v1", "v3"}),
                                                       by_label(g2a, {"u", "v2", "v3"})});

    const Graph g8b = named_graph("fig8b");
    const auto a8b = analyze(g8b);
    CHECK(a8b.bases == std::vector<VertexSet>{by_label(g8b, {"r1", "r2"}), by_label(g8b, {"r1", "v2"})});
    CHECK(a8b.classification.basis_forced == by_label(g8b, {"r1"}));
  }

  TEST_CASE("two-copy glue has the predicted unique basis") {
    const Graph g = named_graph("fig4");
    const std::vector<GluePart> parts{{g, g.at("v3")}, {g, g.at("v2")}};
    const GlueResult w = glue(parts);
    CHECK(w.graph.size() == 2 * g.size() + 1);
    const auto a = analyze(w.graph);
    CHECK(a.dim == glue_dim_formula(parts));
    CHECK(a.bases == std::vector<VertexSet>{by_label(w.graph, {"v6^1", "v5^2"})});
  }

  TEST_CASE("three-copy clique glue and its iterated variant") {
    const Graph g = named_graph("fig2a");
    const std::vector<GluePart> parts(3, GluePart{g, g.at("v1")});
    const GlueResult w1 = glue(parts);
    CHECK(w1.graph.size() == 3 * g.size() + 3);
    const auto a1 = analyze(w1.graph);
    CHECK(a1.dim == 6);
    CHECK(glue_dim_formula(parts) == 6);
    CHECK(a1.basis_forced_count() == 3);

    const GlueResult w3 = iterated_glue(g, g.at("v1"), g.at("v3"), 3);
    CHECK(w3.graph.size() == 3 * g.size() + 2);
    const auto a3 = analyze(w3.graph);
    CHECK(a3.dim == 5);
    CHECK(a3.classification.basis_forced == by_label(w3.graph, {"u^1", "u^2", "u^3"}));
  }

  TEST_CASE("glue validates its parts") {
    const Graph g4 = named_graph("fig4");
    const Graph g1b = named_graph("fig1b");
    std::vector<GluePart> parts{{path_graph(4), 0}, {g4, 0}};
    CHECK(kind_of([&] { glue(parts); }) == ConstructionError::Kind::PartIsPath);
    parts = {{g1b, g1b.at("c1")}, {g4, g4.at("v2")}};
    CHECK(kind_of([&] { glue(parts); }) == ConstructionError::Kind::AnchorIsVoid);
    parts = {{Graph(3), 0}, {g4, 0}};
    CHECK(kind_of([&] { glue(parts); }) == ConstructionError::Kind::PartDisconnected);
    parts = {{g4, g4.at("v2")}};
    CHECK(kind_of([&] { glue(parts); }) == ConstructionError::Kind::TooFewParts);
  }

  TEST_CASE("glue formula holds on random parts") {
    std::mt19937_64 rng(53);
    int tried = 0;
    while (tried < 25) {
      std::vector<GluePart> parts;
      for (int k = 0; k < 2 + tried % 2; ++k) {
        Graph p = random_connected_graph(rng, 4 + (tried + k) % 4, 0.45);
        if (is_path(p)) p = cycle_graph(5);
        const auto a = analyze(p);
        const VertexSet& b = a.bases[static_cast<std::size_t>(rng() % a.bases.size())];
        parts.push_back({p, b[static_cast<std::size_t>(rng() % b.size())]});
      }
      const GlueResult w = glue(parts);
      REQUIRE(oracle::metric_dimension(w.graph) == glue_dim_formula(parts));
      ++tried;
    }
  }

  TEST_CASE("complement patterns build the stated complement") {
    const char* patterns[] = {"P5,K0:1", "P5,P5,K0:1", "K2,K2,K0:3", "K1n:3,P4", "C4,K3", "K1_4,K2", "G,J", "H7,K0:1"};
    for (const char* text : patterns) {
      const ComplementPattern p = parse_pattern(text);
      const Graph g = from_complement_pattern(p);
      std::vector<Graph> pieces;
      for (const auto& piece : p) pieces.push_back(piece_graph(piece));
      const Graph expect = disjoint_union(pieces).graph;
      CHECK_MESSAGE(isomorphic(complement(g), expect), text);
      CHECK(parse_pattern([&] {
              std::string s;
              for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
              return s;
            }()) == p);
    }
  }

  TEST_CASE("pattern pieces") {
    CHECK(isomorphic(piece_graph({PieceKind::P5, 0}), path_graph(5)));
    CHECK(isomorphic(piece_graph({PieceKind::K1n, 3}), star_graph(3)));
    CHECK(isomorphic(piece_graph({PieceKind::C4, 0}), cycle_graph(4)));
    const Graph h = piece_graph({PieceKind::H7, 0});
    CHECK(h.order() == 8);
    CHECK(h.degree(h.at("v4")) == 3);
    CHECK(h.degree(h.at("v8")) == 1);
  }

  TEST_CASE("pattern errors") {
    CHECK_THROWS_AS(parse_pattern("Q9"), ConstructionError);
    CHECK(kind_of([] { from_complement_pattern(parse_pattern("K1n:4")); }) ==
          ConstructionError::Kind::ResultDisconnected);
  }

  TEST_CASE("dense family: forced count, dimension, edge count") {
    for (std::size_t m = 1; m <= 2; ++m) {
      const Graph g = from_complement_pattern(parse_pattern("P5,K0:" + std::to_string(m)));
      const auto a = analyze(g);
      CHECK(a.basis_forced_count() == 2);
      CHECK(a.dim == 2 + m - 1);
      CHECK(g.size() == c2(g.order()) - 4);
      CHECK(a.basis_forced_count() == g.order() - a.dim - 2);
    }
  }

  TEST_CASE("unicyclic invariants on hand examples") {
    const auto c = unicyclic_invariants(cycle_graph(6));
    CHECK(c.cycle.size() == 6);
    CHECK(c.L == 0);
    CHECK(c.b == 0);
    CHECK(c.type1);
    CHECK(c.dim_range() == std::pair<std::size_t, std::size_t>{2, 3});

    // Triangle with a spider of three legs hanging at vertex 0.
    const Graph spider = Graph::from_edge_list(
        9, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {3, 5}, {5, 6}, {3, 7}, {7, 8}});
    const auto s = unicyclic_invariants(spider);
    CHECK(s.L == 2);
    CHECK(s.b == 1);
    CHECK_FALSE(s.type1);
    const auto a = analyze(spider);
    CHECK(a.dim >= s.dim_range().first);
    CHECK(a.dim <= s.dim_range().second);

    CHECK(kind_of([] { unicyclic_invariants(path_graph(4)); }) == ConstructionError::Kind::NotUnicyclic);
  }

  TEST_CASE("unicyclic dimension range on random unicyclic graphs") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 300; ++i) {
      const Graph g = random_unicyclic_graph(rng, 4 + i % 12);
      const auto inv = unicyclic_invariants(g);
      const std::size_t d = analyze(g).dim;
      REQUIRE(d >= inv.dim_range().first);
      REQUIRE(d <= inv.dim_range().second);
    }
  }
}
