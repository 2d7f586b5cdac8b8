#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbasis/errors.hpp"
#include "mbasis/graph.hpp"

namespace mbasis {

/// Edge {x,y} of G_R carrying colour r: r is the only member of R that
/// separates x and y.
struct ColourEdge {
  Vertex x;
  Vertex y;
  Vertex colour;

  friend bool operator==(const ColourEdge&, const ColourEdge&) = default;
  friend auto operator<=>(const ColourEdge&, const ColourEdge&) = default;
};

/// The colour graph G_R of a vertex set R.
class ColourGraph {
 public:
  std::size_t order() const noexcept { return n_; }
  const VertexSet& reference() const noexcept { return r_; }
  /// Edges with x < y, in lexicographic order.
  const std::vector<ColourEdge>& edges() const noexcept { return edges_; }
  /// Whether R separates every pair (some checks require it).
  bool resolving() const noexcept { return resolving_; }

  std::optional<Vertex> colour(Vertex x, Vertex y) const;
  std::vector<ColourEdge> edges_of(Vertex colour) const;

 private:
  friend ColourGraph build_colour_graph(const DistanceMatrix& dm, std::span<const Vertex> r);

  std::size_t n_ = 0;
  VertexSet r_;
  std::vector<ColourEdge> edges_;
  std::vector<std::int32_t> colour_;  // n*n, -1 for no edge
  bool resolving_ = false;
};

/// Throws std::invalid_argument for an empty R, std::out_of_range for ids >= n.
ColourGraph build_colour_graph(const DistanceMatrix& dm, std::span<const Vertex> r);

/// Outcome of one structural check. `witness` holds the offending vertices
/// (a cycle, a triple, a colour) when `passed` is false.
struct PropertyCheck {
  std::string property;
  bool passed = true;
  std::vector<Vertex> witness;
  std::string detail;
};

/// No cycle of G_R uses some colour exactly once. Checked exactly: a colour-c
/// edge {x,y} lies on such a cycle iff x and y stay connected after deleting
/// every colour-c edge. The witness is the cycle x, ..., y.
PropertyCheck check_cycle_property(const ColourGraph& cg);

/// Edges {x,y}, {x,z} of one colour force {y,z} of that colour.
/// Throws std::invalid_argument when R is not resolving.
PropertyCheck check_transitivity(const ColourGraph& cg);

/// Every b in forced ∩ R colours at least two edges.
PropertyCheck check_forced_colour_counts(const ColourGraph& cg, std::span<const Vertex> forced);
/// Every b in forced ∩ R colours some edge with both ends outside R.
PropertyCheck check_forced_outside_edges(const ColourGraph& cg, std::span<const Vertex> forced);

/// Every r in R colours at least one edge (true for metric bases).
PropertyCheck check_every_colour_present(const ColourGraph& cg);
/// No edge of G_R joins two members of R.
PropertyCheck check_reference_independent(const ColourGraph& cg);
/// Every edge at r in R has colour r.
PropertyCheck check_incident_colours(const ColourGraph& cg);

class NotAClique : public Error {
 public:
  NotAClique(const std::string& what, std::pair<Vertex, Vertex> missing)
      : Error(what), missing_(missing) {}
  /// A pair inside one component with no edge of the colour.
  std::pair<Vertex, Vertex> missing() const noexcept { return missing_; }

 private:
  std::pair<Vertex, Vertex> missing_;
};

/// Connected components (with at least one edge) of the colour class, each
/// verified to be a clique. Throws NotAClique.
std::vector<VertexSet> monochromatic_components(const ColourGraph& cg, Vertex colour);

/// DOT with one palette colour per member of R, assigned in id order.
std::string colour_graph_to_dot(const ColourGraph& cg, const Graph& g);

}  // namespace mbasis
