#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>

#include "mbasis/graph.hpp"

namespace mbasis {

/// Isomorphism-invariant code of a small graph: the lexicographically
/// smallest upper-triangle adjacency bit string over all vertex orders that
/// respect colour refinement. Equal codes <=> isomorphic graphs.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t code = 0;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Throws UnsupportedInput for n > kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace mbasis
