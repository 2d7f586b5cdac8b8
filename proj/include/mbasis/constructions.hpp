#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbasis/graph.hpp"
#include "mbasis/resolver.hpp"

namespace mbasis {

// ---------------------------------------------------------------------------
// Glue: join connected non-path graphs by a clique on non-void anchors.

struct GluePart {
  Graph graph;
  Vertex anchor = 0;
};

struct GlueResult {
  Graph graph;
  /// Anchor ids in the glued graph, one per part.
  std::vector<Vertex> anchors;
  /// offsets[i] is the id of vertex 0 of part i.
  std::vector<Vertex> offsets;
};

/// Validates every part (connected, not a path, anchor in some metric basis)
/// and joins the anchors pairwise. Throws ConstructionError.
GlueResult glue(std::span<const GluePart> parts, const SearchBudget& budget = {});

/// Sum of the parts' dimensions minus the number of parts. Same validation
/// as glue().
std::size_t glue_dim_formula(std::span<const GluePart> parts, const SearchBudget& budget = {});

/// Chains `copies` copies of `part`: copies 1 and 2 are joined at
/// `first_anchor`, then copy i+1 is joined to the graph so far by an edge
/// from `carry_anchor` of copy i to `first_anchor` of copy i+1. Every step
/// is a validated two-part glue. Labels become "name^i".
GlueResult iterated_glue(const Graph& part, Vertex first_anchor, Vertex carry_anchor, std::size_t copies,
                         const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Complement patterns: describe G by the components of its complement.

enum class PieceKind { K2, K1n, P4, P5, K3, C4, K1_4, SpecialG, SpecialJ, H7, IsolatedBlock };

struct PatternPiece {
  PieceKind kind = PieceKind::K2;
  /// Leaves for K1n, vertex count for IsolatedBlock; unused otherwise.
  std::size_t param = 0;

  friend bool operator==(const PatternPiece&, const PatternPiece&) = default;
};

using ComplementPattern = std::vector<PatternPiece>;

/// The piece itself (a component of the complement). Vertices are labelled
/// v1..vk; for H7 the path is v1..v7 and v8 hangs at v4. SpecialG is K1,3
/// with a pendant on a leaf, SpecialJ a triangle with a pendant.
Graph piece_graph(const PatternPiece& piece);

/// Complement of the disjoint union of the pieces. Throws ConstructionError
/// (ResultDisconnected, BadParameter).
Graph from_complement_pattern(std::span<const PatternPiece> pattern);

/// Comma-separated pieces: K2, K1n:<leaves>, P4, P5, K3, C4, K1_4, G, J, H7,
/// K0:<m> (m isolated vertices). Throws ConstructionError(BadParameter).
ComplementPattern parse_pattern(std::string_view text);
std::string to_string(const PatternPiece& piece);

// ---------------------------------------------------------------------------
// Unicyclic invariants.

struct UnicyclicInvariants {
  /// Cycle vertices in cyclic order, starting at the smallest id.
  std::vector<Vertex> cycle;
  /// Per vertex: number of threads (paths ending in a pendant whose inner
  /// vertices all have degree 2) that end at it.
  std::vector<std::size_t> threads;
  /// Sum of threads(v) - 1 over vertices with more than one thread.
  std::size_t L = 0;
  /// Cycle vertices carrying something other than nothing or one path.
  std::size_t b = 0;
  /// Max degree at most 3 and every degree-3 vertex on the cycle.
  bool type1 = false;

  /// The two admissible values of the metric dimension.
  std::pair<std::size_t, std::size_t> dim_range() const {
    const std::size_t lo = L + (b < 2 ? 2 - b : 0);
    return {lo, lo + 1};
  }
};

/// Throws ConstructionError(NotUnicyclic) or DisconnectedGraph.
UnicyclicInvariants unicyclic_invariants(const Graph& g);

// ---------------------------------------------------------------------------
// Catalogue of small named graphs.

/// Keys: fig1a, fig1b, fig1c, fig2a, fig4, fig7, fig8a, fig8b.
/// Throws ConstructionError(UnknownName).
Graph named_graph(std::string_view key);
std::vector<std::string> named_graph_keys();

}  // namespace mbasis
