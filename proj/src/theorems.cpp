#include "mbasis/theorems.hpp"

#include <algorithm>

#include "mbasis/colour_graph.hpp"
#include "mbasis/constructions.hpp"

namespace mbasis {

bool TheoremReport::ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const TheoremEntry& e) { return e.failed(); });
}

std::vector<const TheoremEntry*> TheoremReport::failures() const {
  std::vector<const TheoremEntry*> out;
  for (const auto& e : entries) {
    if (e.failed()) out.push_back(&e);
  }
  return out;
}

const TheoremEntry* TheoremReport::find(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

namespace {

/// Accumulates one entry; the first failure wins the witness.
class Entry {
 public:
  explicit Entry(std::string id) { e_.id = std::move(id); }

  void applies() { e_.applicable = true; }
  void check(bool ok, const std::string& witness, const std::string& detail) {
    e_.applicable = true;
    if (!ok && e_.passed) {
      e_.passed = false;
      e_.witness = witness;
      e_.detail = detail;
    }
  }
  TheoremEntry done() && { return std::move(e_); }

 private:
  TheoremEntry e_;
};

std::string set_name(const Graph& g, std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.name(s[i]);
  return out + "}";
}

std::size_t forced_count(const ResolvingAnalysis& a) { return a.classification.basis_forced.size(); }

bool is_forced(const ResolvingAnalysis& a, Vertex v) {
  return a.classification.of[v] == VertexClass::BasisForced;
}

/// Components of G - v, each with the flag "G[C + v] is a path".
struct Branch {
  VertexSet vertices;
  bool path_to_v;
};

std::vector<Branch> branches_at(const Graph& g, Vertex v) {
  const Subgraph rest = remove_vertex(g, v);
  std::vector<Branch> out;
  for (const auto& comp : connected_components(rest.graph)) {
    Branch b;
    for (Vertex x : comp) b.vertices.push_back(rest.original[x]);
    std::vector<Vertex> with_v = b.vertices;
    with_v.push_back(v);
    const Subgraph sub = induced_subgraph(g, with_v);
    b.path_to_v = is_path(sub.graph);
    out.push_back(std::move(b));
  }
  return out;
}

std::size_t choose2(std::size_t n) { return n * (n - (n > 0)) / 2; }

}  // namespace

std::vector<TheoremEntry> check_cut_vertex_theorems(const Graph& g, const ResolvingAnalysis& a) {
  Entry multi("cut_vertex_multi_branch_void");
  Entry path_branch("cut_vertex_path_branch_not_forced");
  Entry unused("cut_vertex_unused_branch_is_path");
  Entry cut_free("cut_free_basis_exists");

  const VertexSet cuts = cut_vertices(g);
  for (Vertex v : cuts) {
    const auto br = branches_at(g, v);
    const bool many = br.size() >= 3;
    const bool two_non_path = br.size() == 2 && !br[0].path_to_v && !br[1].path_to_v;
    if (many || two_non_path) {
      multi.check(a.classification.of[v] == VertexClass::Void, g.name(v),
                  "cut vertex with " + std::to_string(br.size()) + " branches is " +
                      to_string(a.classification.of[v]));
    }
    if (br.size() == 2 && (br[0].path_to_v || br[1].path_to_v)) {
      path_branch.check(!is_forced(a, v), g.name(v), "cut vertex with a path branch is basis forced");
    }
    for (const auto& basis : a.bases) {
      std::size_t missed = 0;
      bool missed_non_path = false;
      for (const auto& b : br) {
        const bool hit = std::any_of(b.vertices.begin(), b.vertices.end(),
                                     [&](Vertex x) { return contains(basis, x); });
        if (!hit) {
          ++missed;
          missed_non_path = missed_non_path || !b.path_to_v;
        }
      }
      unused.check(missed <= 1 && !missed_non_path, g.name(v) + " " + set_name(g, basis),
                   "basis misses " + std::to_string(missed) + " branch(es) at this cut vertex" +
                       (missed_non_path ? ", one of them not a path" : ""));
    }
  }
  if (!cuts.empty()) {
    const bool found = std::any_of(a.bases.begin(), a.bases.end(), [&](const VertexSet& b) {
      return std::none_of(b.begin(), b.end(), [&](Vertex x) { return contains(cuts, x); });
    });
    cut_free.check(found, set_name(g, cuts), "every basis contains a cut vertex");
  }
  std::vector<TheoremEntry> out;
  out.push_back(std::move(multi).done());
  out.push_back(std::move(path_branch).done());
  out.push_back(std::move(unused).done());
  out.push_back(std::move(cut_free).done());
  return out;
}

std::vector<TheoremEntry> check_pendant_theorems(const Graph& g, const ResolvingAnalysis& a) {
  Entry split("pendant_split_not_forced");
  Entry deg2("pendant_degree_two_support_not_forced");
  Entry tree("tree_has_no_forced");

  const bool path = is_path(g);
  for (Vertex u : pendants(g)) {
    const Vertex v = g.neighbours(u)[0];
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (x != u && x != v) rest.push_back(x);
    }
    const Subgraph sub = induced_subgraph(g, rest);
    if (connected_components(sub.graph).size() >= 2) {
      split.check(!is_forced(a, u), g.name(u), "pendant whose removal with its neighbour splits the graph is basis forced");
    }
    if (!path && g.degree(v) == 2) {
      deg2.check(!is_forced(a, u), g.name(u), "pendant on a degree-2 vertex is basis forced");
    }
  }
  if (is_tree(g)) {
    tree.check(forced_count(a) == 0, set_name(g, a.classification.basis_forced), "tree has basis forced vertices");
  }
  std::vector<TheoremEntry> out;
  out.push_back(std::move(split).done());
  out.push_back(std::move(deg2).done());
  out.push_back(std::move(tree).done());
  return out;
}

std::vector<TheoremEntry> check_unicyclic_bound(const Graph& g, const ResolvingAnalysis& a) {
  Entry forced("unicyclic_forced_at_most_two");
  Entry range("unicyclic_dimension_range");
  Entry triple("unicyclic_type1_triple_resolves");

  if (is_unicyclic(g)) {
    const UnicyclicInvariants inv = unicyclic_invariants(g);
    forced.check(forced_count(a) <= 2, set_name(g, a.classification.basis_forced),
                 std::to_string(forced_count(a)) + " basis forced vertices");
    const auto [lo, hi] = inv.dim_range();
    range.check(a.dim == lo || a.dim == hi, "dim=" + std::to_string(a.dim),
                "dimension " + std::to_string(a.dim) + " outside {" + std::to_string(lo) + "," +
                    std::to_string(hi) + "} (L=" + std::to_string(inv.L) + ", b=" + std::to_string(inv.b) + ")");
    if (inv.type1) {
      const DistanceMatrix dm = distance_matrix(g);
      const std::size_t r = inv.cycle.size();
      for (std::size_t i = 0; i < r; ++i) {
        const VertexSet s = make_vertex_set({inv.cycle[i], inv.cycle[(i + 1) % r], inv.cycle[(i + r / 2) % r]});
        triple.check(is_resolving(dm, s), set_name(g, s), "cycle triple does not resolve");
      }
    }
  }
  std::vector<TheoremEntry> out;
  out.push_back(std::move(forced).done());
  out.push_back(std::move(range).done());
  out.push_back(std::move(triple).done());
  return out;
}

std::vector<TheoremEntry> check_twin_and_complement_lemmas(const Graph& g, const ResolvingAnalysis& a) {
  Entry twins("twin_lower_bound");
  Entry universal("universal_vertex_not_forced");
  Entry comp("complement_component_not_forced");

  const TwinClasses tc = twin_classes(g);
  for (const auto& cls : tc.classes) {
    if (cls.members.size() < 2) continue;
    for (const auto& basis : a.bases) {
      const auto inside = static_cast<std::size_t>(
          std::count_if(cls.members.begin(), cls.members.end(), [&](Vertex v) { return contains(basis, v); }));
      twins.check(inside + 1 >= cls.members.size(), set_name(g, cls.members) + " " + set_name(g, basis),
                   "basis keeps " + std::to_string(inside) + " of a twin class of " +
                       std::to_string(cls.members.size()));
    }
  }
  for (Vertex v : universal_vertices(g)) {
    universal.check(!is_forced(a, v), g.name(v), "universal vertex is basis forced");
  }

  const std::size_t n = g.order();
  const Graph co = complement(g);
  for (const auto& c : connected_components(co)) {
    if (c.size() < 2) continue;
    const Graph piece = induced_subgraph(co, c).graph;
    const std::size_t k = piece.order();
    std::size_t max_deg = 0, leaves = 0;
    bool all_two = true;
    for (Vertex v = 0; v < k; ++v) {
      max_deg = std::max(max_deg, piece.degree(v));
      leaves += piece.degree(v) == 1;
      all_two = all_two && piece.degree(v) == 2;
    }
    const bool clique = piece.size() == choose2(k);
    const bool star = k >= 3 && max_deg == k - 1 && leaves == k - 1;
    const bool p4 = k == 4 && is_path(piece) && n >= 5;
    const bool c4 = k == 4 && all_two && n >= 5;
    if (!(clique || star || p4 || c4)) continue;
    const char* shape = clique ? "complete" : star ? "star" : p4 ? "P4" : "C4";
    for (Vertex v : c) {
      comp.check(!is_forced(a, v), g.name(v) + " in " + set_name(g, c),
                 std::string("vertex of a ") + shape + " complement component is basis forced");
    }
  }
  std::vector<TheoremEntry> out;
  out.push_back(std::move(twins).done());
  out.push_back(std::move(universal).done());
  out.push_back(std::move(comp).done());
  return out;
}

std::vector<TheoremEntry> check_edge_bounds(const Graph& g, const ResolvingAnalysis& a) {
  Entry dense("dense_edge_bound");
  Entry general("forced_edge_bound");
  const std::size_t n = g.order();
  const std::size_t k = forced_count(a);
  const std::size_t m = g.size();
  const std::size_t full = choose2(n);
  if (k >= 1 && n >= 6) {
    bool ok = m + 4 <= full;
    std::string detail = "|E| = " + std::to_string(m) + " exceeds C(n,2) - 4 = " + std::to_string(full - 4);
    if (ok && m + 4 == full) {
      const Graph co = complement(g);
      std::size_t nontrivial = 0;
      bool p5 = false;
      for (const auto& c : connected_components(co)) {
        if (c.size() < 2) continue;
        ++nontrivial;
        const Graph piece = induced_subgraph(co, c).graph;
        p5 = piece.order() == 5 && is_path(piece);
      }
      ok = nontrivial == 1 && p5 && k == 2;
      detail = "extremal graph with k = " + std::to_string(k) + " whose complement is not P5 plus isolated vertices";
      if (nontrivial == 1 && p5) detail = "extremal graph has k = " + std::to_string(k) + ", expected 2";
    }
    dense.check(ok, "|E|=" + std::to_string(m), detail);
  }
  if (k >= 1 && n >= 3) {
    general.check(m + 2 * k <= full, "|E|=" + std::to_string(m) + ",k=" + std::to_string(k),
                  "|E| exceeds C(n,2) - 2k = " + std::to_string(full >= 2 * k ? full - 2 * k : 0));
  }
  std::vector<TheoremEntry> out;
  out.push_back(std::move(dense).done());
  out.push_back(std::move(general).done());
  return out;
}

std::vector<TheoremEntry> check_count_bounds(const Graph& g, const ResolvingAnalysis& a) {
  Entry count("forced_count_bound");
  Entry half("forced_half_bound");
  const std::size_t n = g.order();
  const std::size_t k = forced_count(a);
  if (k >= 1) {
    count.check(k + a.dim + 1 <= n, "k=" + std::to_string(k) + ",dim=" + std::to_string(a.dim),
                "k exceeds n - dim - 1");
    half.check(2 * k + 1 <= n, "k=" + std::to_string(k), "k exceeds (n-1)/2");
  }
  std::vector<TheoremEntry> out;
  out.push_back(std::move(count).done());
  out.push_back(std::move(half).done());
  return out;
}

std::vector<TheoremEntry> check_colour_properties(const Graph& g, const ResolvingAnalysis& a) {
  Entry cycle("colour_cycle");
  Entry trans("colour_transitivity");
  Entry counts("colour_forced_counts");
  Entry outside("colour_forced_outside_edge");
  Entry present("colour_every_colour_present");
  Entry independent("colour_reference_independent");
  Entry incident("colour_incident_edges");
  Entry cliques("colour_classes_are_cliques");

  const DistanceMatrix dm = distance_matrix(g);
  const VertexSet& forced = a.classification.basis_forced;
  auto record = [&](Entry& e, const PropertyCheck& pc, const VertexSet& basis) {
    e.check(pc.passed, set_name(g, basis) + (pc.witness.empty() ? "" : " " + set_name(g, pc.witness)), pc.detail);
  };
  for (const auto& basis : a.bases) {
    const ColourGraph cg = build_colour_graph(dm, basis);
    record(cycle, check_cycle_property(cg), basis);
    record(trans, check_transitivity(cg), basis);
    record(present, check_every_colour_present(cg), basis);
    record(independent, check_reference_independent(cg), basis);
    record(incident, check_incident_colours(cg), basis);
    if (!forced.empty()) {
      record(counts, check_forced_colour_counts(cg, forced), basis);
      record(outside, check_forced_outside_edges(cg, forced), basis);
    }
    for (Vertex r : basis) {
      try {
        monochromatic_components(cg, r);
        cliques.applies();
      } catch (const NotAClique& e) {
        const auto [x, y] = e.missing();
        cliques.check(false, set_name(g, basis) + " " + g.name(x) + "-" + g.name(y), e.what());
      }
    }
  }
  std::vector<TheoremEntry> out;
  for (Entry* e : {&cycle, &trans, &counts, &outside, &present, &independent, &incident, &cliques}) {
    out.push_back(std::move(*e).done());
  }
  return out;
}

TheoremReport run_all(const Graph& g, const SearchBudget& budget) { return run_all(g, analyze(g, budget)); }

TheoremReport run_all(const Graph& g, ResolvingAnalysis analysis) {
  TheoremReport report;
  report.analysis = std::move(analysis);
  const ResolvingAnalysis& a = report.analysis;
  for (auto&& part : {check_cut_vertex_theorems(g, a), check_pendant_theorems(g, a), check_unicyclic_bound(g, a),
                      check_twin_and_complement_lemmas(g, a), check_edge_bounds(g, a), check_count_bounds(g, a),
                      check_colour_properties(g, a)}) {
    report.entries.insert(report.entries.end(), part.begin(), part.end());
  }
  return report;
}

}  // namespace mbasis
