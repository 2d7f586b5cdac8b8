#include "mbasis/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "mbasis/errors.hpp"

namespace mbasis {

namespace {

using Kind = ConstructionError::Kind;

std::vector<std::string> numbered(std::string_view prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

Graph suffixed(const Graph& g, std::size_t copy) {
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.name(v) + "^" + std::to_string(copy));
  return g.with_labels(std::move(labels));
}

/// Checks the preconditions of a part and returns its metric dimension.
std::size_t validate_part(const GluePart& part, std::size_t index, const SearchBudget& budget) {
  const std::string where = "glue part " + std::to_string(index + 1);
  if (part.graph.order() == 0) throw ConstructionError(Kind::BadParameter, where + " is empty");
  if (!is_connected(part.graph)) throw ConstructionError(Kind::PartDisconnected, where + " is disconnected");
  if (is_path(part.graph)) throw ConstructionError(Kind::PartIsPath, where + " is a path");
  if (part.anchor >= part.graph.order()) {
    throw ConstructionError(Kind::BadParameter, where + ": anchor out of range");
  }
  const ResolvingAnalysis a = analyze(part.graph, budget);
  if (a.classification.of[part.anchor] == VertexClass::Void) {
    throw ConstructionError(Kind::AnchorIsVoid,
                            where + ": anchor " + part.graph.name(part.anchor) + " lies in no metric basis");
  }
  return a.dim;
}

}  // namespace

GlueResult glue(std::span<const GluePart> parts, const SearchBudget& budget) {
  if (parts.size() < 2) throw ConstructionError(Kind::TooFewParts, "glue needs at least two parts");
  for (std::size_t i = 0; i < parts.size(); ++i) validate_part(parts[i], i, budget);

  std::vector<Graph> graphs;
  for (const auto& p : parts) graphs.push_back(p.graph);
  const DisjointUnion u = disjoint_union(graphs);

  GlueResult out;
  out.offsets = u.offsets;
  for (std::size_t i = 0; i < parts.size(); ++i) out.anchors.push_back(u.offsets[i] + parts[i].anchor);
  std::vector<Edge> edges = u.graph.edges();
  for (std::size_t i = 0; i < out.anchors.size(); ++i) {
    for (std::size_t j = i + 1; j < out.anchors.size(); ++j) edges.push_back({out.anchors[i], out.anchors[j]});
  }
  out.graph = Graph::from_edge_list(u.graph.order(), edges, u.graph.labels());
  return out;
}

std::size_t glue_dim_formula(std::span<const GluePart> parts, const SearchBudget& budget) {
  if (parts.size() < 2) throw ConstructionError(Kind::TooFewParts, "glue needs at least two parts");
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) total += validate_part(parts[i], i, budget);
  return total - parts.size();
}

GlueResult iterated_glue(const Graph& part, Vertex first_anchor, Vertex carry_anchor, std::size_t copies,
                         const SearchBudget& budget) {
  if (copies < 2) throw ConstructionError(Kind::TooFewParts, "iterated glue needs at least two copies");
  if (first_anchor >= part.order() || carry_anchor >= part.order()) {
    throw ConstructionError(Kind::BadParameter, "iterated glue: anchor out of range");
  }
  const std::vector<GluePart> first{{suffixed(part, 1), first_anchor}, {suffixed(part, 2), first_anchor}};
  GlueResult acc = glue(first, budget);
  std::vector<Vertex> joined{acc.anchors[0], acc.anchors[1]};
  for (std::size_t i = 3; i <= copies; ++i) {
    const Vertex carry = acc.offsets.back() + carry_anchor;
    const std::vector<GluePart> step{{acc.graph, carry}, {suffixed(part, i), first_anchor}};
    GlueResult next = glue(step, budget);
    joined.push_back(carry);
    joined.push_back(next.anchors[1]);
    acc.offsets.push_back(next.offsets[1]);
    acc.graph = std::move(next.graph);
  }
  acc.anchors = make_vertex_set(std::move(joined));
  return acc;
}

// ---------------------------------------------------------------------------

Graph piece_graph(const PatternPiece& piece) {
  auto build = [](std::size_t n, std::initializer_list<Edge> edges) {
    return Graph::from_edge_list(n, edges, numbered("v", n));
  };
  switch (piece.kind) {
    case PieceKind::K2:
      return build(2, {{0, 1}});
    case PieceKind::K1n:
    case PieceKind::K1_4: {
      const std::size_t leaves = piece.kind == PieceKind::K1_4 ? 4 : piece.param;
      if (leaves == 0) throw ConstructionError(Kind::BadParameter, "K1n needs at least one leaf");
      return star_graph(leaves).with_labels(numbered("v", leaves + 1));
    }
    case PieceKind::P4:
      return path_graph(4).with_labels(numbered("v", 4));
    case PieceKind::P5:
      return path_graph(5).with_labels(numbered("v", 5));
    case PieceKind::K3:
      return build(3, {{0, 1}, {1, 2}, {0, 2}});
    case PieceKind::C4:
      return build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case PieceKind::SpecialG:
      return build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    case PieceKind::SpecialJ:
      return build(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    case PieceKind::H7:
      return build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
    case PieceKind::IsolatedBlock:
      if (piece.param == 0) throw ConstructionError(Kind::BadParameter, "K0 block needs at least one vertex");
      return Graph(piece.param).with_labels(numbered("v", piece.param));
  }
  throw ConstructionError(Kind::BadParameter, "unknown pattern piece");
}

Graph from_complement_pattern(std::span<const PatternPiece> pattern) {
  if (pattern.empty()) throw ConstructionError(Kind::BadParameter, "empty complement pattern");
  std::vector<Graph> pieces;
  for (const auto& p : pattern) pieces.push_back(piece_graph(p));
  const Graph g = complement(disjoint_union(pieces).graph);
  if (g.order() < 2) throw ConstructionError(Kind::BadParameter, "complement pattern needs at least 2 vertices");
  if (!is_connected(g)) {
    throw ConstructionError(Kind::ResultDisconnected, "complement of the pattern is disconnected");
  }
  return g;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_param(std::string_view token, std::string_view digits) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) {
    throw ConstructionError(Kind::BadParameter, "bad count in pattern piece '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ComplementPattern parse_pattern(std::string_view text) {
  ComplementPattern out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = trim(text.substr(start, comma - start));
    start = comma + 1;
    if (token.empty()) throw ConstructionError(Kind::BadParameter, "empty piece in pattern");
    const std::size_t colon = token.find(':');
    const std::string_view name = token.substr(0, colon);
    if (colon != std::string_view::npos) {
      const std::size_t param = parse_param(token, token.substr(colon + 1));
      if (name == "K1n") {
        out.push_back({PieceKind::K1n, param});
      } else if (name == "K0") {
        out.push_back({PieceKind::IsolatedBlock, param});
      } else {
        throw ConstructionError(Kind::BadParameter, "unknown pattern piece '" + std::string(token) + "'");
      }
      continue;
    }
    static const std::pair<std::string_view, PieceKind> kFixed[] = {
        {"K2", PieceKind::K2},       {"P4", PieceKind::P4},       {"P5", PieceKind::P5},
        {"K3", PieceKind::K3},       {"C4", PieceKind::C4},       {"K1_4", PieceKind::K1_4},
        {"G", PieceKind::SpecialG},  {"J", PieceKind::SpecialJ},  {"H7", PieceKind::H7},
        {"SpecialG", PieceKind::SpecialG}, {"SpecialJ", PieceKind::SpecialJ}};
    const auto it = std::find_if(std::begin(kFixed), std::end(kFixed),
                                 [&](const auto& entry) { return entry.first == name; });
    if (it == std::end(kFixed)) {
      throw ConstructionError(Kind::BadParameter, "unknown pattern piece '" + std::string(token) + "'");
    }
    out.push_back({it->second, 0});
  }
  return out;
}

std::string to_string(const PatternPiece& piece) {
  switch (piece.kind) {
    case PieceKind::K2: return "K2";
    case PieceKind::K1n: return "K1n:" + std::to_string(piece.param);
    case PieceKind::P4: return "P4";
    case PieceKind::P5: return "P5";
    case PieceKind::K3: return "K3";
    case PieceKind::C4: return "C4";
    case PieceKind::K1_4: return "K1_4";
    case PieceKind::SpecialG: return "G";
    case PieceKind::SpecialJ: return "J";
    case PieceKind::H7: return "H7";
    case PieceKind::IsolatedBlock: return "K0:" + std::to_string(piece.param);
  }
  return "?";
}

// ---------------------------------------------------------------------------

UnicyclicInvariants unicyclic_invariants(const Graph& g) {
  if (!is_unicyclic(g)) throw ConstructionError(Kind::NotUnicyclic, "graph is not unicyclic");
  const std::size_t n = g.order();

  // Strip pendants until only the cycle is left.
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) queue.push_back(v);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex v = queue[i];
    removed[v] = true;
    for (Vertex w : g.neighbours(v)) {
      if (!removed[w] && --deg[w] == 1) queue.push_back(w);
    }
  }
  std::vector<bool> on_cycle(n);
  for (Vertex v = 0; v < n; ++v) on_cycle[v] = !removed[v];

  UnicyclicInvariants inv;
  Vertex start = 0;
  while (!on_cycle[start]) ++start;
  Vertex prev = start;
  Vertex cur = start;
  do {
    inv.cycle.push_back(cur);
    Vertex next = cur;
    for (Vertex w : g.neighbours(cur)) {
      if (on_cycle[w] && w != prev && w != cur) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);

  inv.threads.assign(n, 0);
  for (Vertex leaf = 0; leaf < n; ++leaf) {
    if (g.degree(leaf) != 1) continue;
    Vertex back = leaf;
    Vertex at = g.neighbours(leaf)[0];
    while (g.degree(at) == 2) {
      const auto nb = g.neighbours(at);
      const Vertex next = nb[0] == back ? nb[1] : nb[0];
      back = at;
      at = next;
    }
    ++inv.threads[at];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (inv.threads[v] > 1) inv.L += inv.threads[v] - 1;
  }

  for (Vertex v : inv.cycle) {
    std::vector<Vertex> hanging;
    for (Vertex w : g.neighbours(v)) {
      if (!on_cycle[w]) hanging.push_back(w);
    }
    if (hanging.empty()) continue;
    bool single_path = hanging.size() == 1;
    if (single_path) {
      std::vector<Vertex> tree{hanging[0]};
      std::vector<bool> seen(n, false);
      seen[hanging[0]] = true;
      for (std::size_t i = 0; i < tree.size() && single_path; ++i) {
        if (g.degree(tree[i]) > 2) single_path = false;
        for (Vertex w : g.neighbours(tree[i])) {
          if (!on_cycle[w] && !seen[w]) {
            seen[w] = true;
            tree.push_back(w);
          }
        }
      }
    }
    if (!single_path) ++inv.b;
  }

  inv.type1 = true;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 3 || (g.degree(v) == 3 && !on_cycle[v])) inv.type1 = false;
  }
  return inv;
}

// ---------------------------------------------------------------------------

namespace {

// Hexagon with pendants; vertex order shared by the fig1 family:
// 0 (0,0), 1 (1,.5), 2 (1,1.5), 3 (0,2), 4 (-1,1.5), 5 (-1,.5),
// 6 (2,0), 7 (-2,0), 8 (2,2) or (0,1), 9 (-2,2), 10 (0,3).
Graph fig1b() {
  return Graph::from_edge_list(
      11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 6}, {5, 7}, {2, 8}, {4, 9}, {3, 10}},
      {"c1", "c2", "c3", "c4", "u1", "c6", "p2", "p6", "u2", "p5", "p4"});
}

Graph fig1a() {
  return Graph::from_edge_list(
      11, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 0}, {1, 6}, {5, 7}, {2, 8}, {4, 9}, {3, 10}},
      {"c1", "c2", "c3", "v2", "v1", "c6", "p2", "p6", "p3", "p5", "p4"});
}

Graph fig1c() {
  return Graph::from_edge_list(
      11,
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 6}, {5, 7}, {2, 8}, {4, 8}, {4, 9}, {3, 10}},
      {"c1", "c2", "c3", "c4", "c5", "c6", "p2", "p6", "x", "p5", "p4"});
}

// Hexagon, a hub h at (2,2) on c3 carrying v1, v2, v3, and pendants p4, p5.
Graph fig2a() {
  return Graph::from_edge_list(
      12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 6}, {6, 7}, {6, 8}, {6, 9}, {3, 10}, {4, 11}},
      {"u", "c2", "c3", "c4", "c5", "c6", "h", "v1", "v2", "v3", "p4", "p5"});
}

Graph fig4() {
  // v1..v6 are ids 0..5.
  return Graph::from_edge_list(
      6, {{3, 4}, {4, 1}, {1, 0}, {0, 2}, {2, 5}, {5, 3}, {3, 1}, {2, 3}, {4, 5}}, numbered("v", 6));
}

// Complement of P5 plus an isolated vertex: v3 r1 v4 r2 v2 is the path, v1 the
// isolated vertex.
Graph fig8a() {
  return Graph::from_edge_list(
      6, {{2, 1}, {1, 4}, {4, 2}, {2, 0}, {0, 3}, {3, 2}, {2, 5}, {5, 4}, {4, 3}, {3, 5}, {0, 1}},
      {"r1", "r2", "v1", "v2", "v3", "v4"});
}

Graph fig8b() {
  return Graph::from_edge_list(
      6, {{2, 1}, {1, 4}, {4, 2}, {2, 0}, {0, 3}, {3, 2}, {2, 5}, {5, 4}, {4, 3}, {0, 1}},
      {"r1", "r2", "v1", "v2", "v3", "v4"});
}

}  // namespace

Graph named_graph(std::string_view key) {
  if (key == "fig1a") return fig1a();
  if (key == "fig1b") return fig1b();
  if (key == "fig1c") return fig1c();
  if (key == "fig2a") return fig2a();
  if (key == "fig4") return fig4();
  if (key == "fig7" || key == "fig8a") return fig8a();
  if (key == "fig8b") return fig8b();
  throw ConstructionError(Kind::UnknownName, "unknown graph name '" + std::string(key) + "'");
}

std::vector<std::string> named_graph_keys() {
  return {"fig1a", "fig1b", "fig1c", "fig2a", "fig4", "fig7", "fig8a", "fig8b"};
}

}  // namespace mbasis
