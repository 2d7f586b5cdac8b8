#pragma once

#include <string>
#include <vector>

#include "mbasis/graph.hpp"
#include "mbasis/resolver.hpp"

namespace mbasis {

/// One checked statement. Hypotheses are tested first: an entry that is not
/// applicable is vacuous and always counts as passed. A failure carries the
/// offending vertex, set or count in `witness`.
struct TheoremEntry {
  std::string id;
  bool applicable = false;
  bool passed = true;
  std::string witness;
  std::string detail;

  bool failed() const noexcept { return applicable && !passed; }
};

struct TheoremReport {
  ResolvingAnalysis analysis;
  std::vector<TheoremEntry> entries;

  bool ok() const;
  std::vector<const TheoremEntry*> failures() const;
  const TheoremEntry* find(const std::string& id) const;
};

/// Cut vertex statements:
///  cut_vertex_multi_branch_void: a cut vertex with three or more branches, or
///    two branches neither of which is a path ending at it, is void;
///  cut_vertex_path_branch_not_forced: a cut vertex with exactly two branches,
///    one a path ending at it, is not basis forced;
///  cut_vertex_unused_branch_is_path: a basis misses at most one branch, and
///    that branch together with the cut vertex is a path;
///  cut_free_basis_exists: some basis contains no cut vertex.
std::vector<TheoremEntry> check_cut_vertex_theorems(const Graph& g, const ResolvingAnalysis& a);

/// Pendant statements:
///  pendant_split_not_forced: a pendant u with neighbour v such that G - {u,v}
///    is disconnected is not basis forced;
///  pendant_degree_two_support_not_forced: in a non-path graph, a pendant whose
///    neighbour has degree 2 is not basis forced;
///  tree_has_no_forced: trees have no basis forced vertex.
std::vector<TheoremEntry> check_pendant_theorems(const Graph& g, const ResolvingAnalysis& a);

/// Unicyclic statements: at most two basis forced vertices
/// (unicyclic_forced_at_most_two), dimension within {L + max(2-b,0), +1}
/// (unicyclic_dimension_range), and for type-1 graphs every triple of two
/// consecutive cycle vertices plus the vertex half-way round resolves
/// (unicyclic_type1_triple_resolves).
std::vector<TheoremEntry> check_unicyclic_bound(const Graph& g, const ResolvingAnalysis& a);

/// Twin and complement statements:
///  twin_lower_bound: every basis keeps all but at most one vertex of each
///    twin class;
///  universal_vertex_not_forced;
///  complement_component_not_forced: vertices of a complement component
///    isomorphic to K_n (n >= 2), K_{1,n} (n >= 2), or, when the graph has at
///    least 5 vertices, P4 or C4, are not basis forced.
std::vector<TheoremEntry> check_twin_and_complement_lemmas(const Graph& g, const ResolvingAnalysis& a);

/// Edge bounds for k >= 1 basis forced vertices:
///  dense_edge_bound: n >= 6 gives |E| <= C(n,2) - 4, and equality forces the
///    complement to be P5 plus isolated vertices and k = 2;
///  forced_edge_bound: n >= 3 gives |E| <= C(n,2) - 2k.
std::vector<TheoremEntry> check_edge_bounds(const Graph& g, const ResolvingAnalysis& a);

/// For k >= 1: k <= n - dim - 1 (forced_count_bound) and 2k <= n - 1
/// (forced_half_bound).
std::vector<TheoremEntry> check_count_bounds(const Graph& g, const ResolvingAnalysis& a);

/// Colour graph statements, checked on every basis:
///  colour_cycle, colour_transitivity, colour_forced_counts,
///  colour_forced_outside_edge, colour_every_colour_present,
///  colour_reference_independent, colour_incident_edges,
///  colour_classes_are_cliques.
std::vector<TheoremEntry> check_colour_properties(const Graph& g, const ResolvingAnalysis& a);

/// analyze() followed by every checker above. Propagates resolver errors.
TheoremReport run_all(const Graph& g, const SearchBudget& budget = {});
/// Same, reusing an existing analysis.
TheoremReport run_all(const Graph& g, ResolvingAnalysis analysis);

}  // namespace mbasis
