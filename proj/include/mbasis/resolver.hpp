#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mbasis/graph.hpp"

namespace mbasis {

/// The resolving relation as a set-cover instance.
///
/// Universe: all unordered pairs {x,y}, x < y, indexed in lexicographic order.
/// Vertex w covers pair {x,y} iff d(w,x) != d(w,y). A set R resolves G iff the
/// union of its cover masks is the whole universe.
class PairSystem {
 public:
  static PairSystem build(const DistanceMatrix& dm);

  std::size_t order() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  std::size_t words() const noexcept { return words_; }

  std::pair<Vertex, Vertex> pair(std::size_t index) const { return pairs_.at(index); }
  std::size_t pair_index(Vertex x, Vertex y) const;

  /// Cover mask of w, `words()` 64-bit words over pair indices.
  std::span<const std::uint64_t> mask(Vertex w) const {
    return {masks_.data() + static_cast<std::size_t>(w) * words_, words_};
  }
  bool covers(Vertex w, std::size_t pair_index) const {
    return (mask(w)[pair_index >> 6] >> (pair_index & 63)) & 1u;
  }
  /// Vertices that separate the given pair, ascending.
  const std::vector<Vertex>& coverers(std::size_t pair_index) const { return coverers_.at(pair_index); }

  bool is_resolving(std::span<const Vertex> r) const;
  /// Pairs not separated by any member of r, as (x,y) with x < y.
  std::vector<std::pair<Vertex, Vertex>> unresolved_pairs(std::span<const Vertex> r) const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<Vertex>> coverers_;
};

/// Direct check on distances, usable for graphs of any order.
bool is_resolving(const DistanceMatrix& dm, std::span<const Vertex> r);
std::vector<std::pair<Vertex, Vertex>> unresolved_pairs(const DistanceMatrix& dm,
                                                        std::span<const Vertex> r);

/// Limits for the exact search. Exceeding either raises SearchBudgetExceeded.
struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{60'000};
  /// Worker threads for the top-level branches; results do not depend on it.
  unsigned threads = 1;
};

/// Largest order the search kernel accepts (vertex sets are 64-bit masks).
inline constexpr std::size_t kMaxSearchOrder = 64;

/// Sum over non-singleton twin classes T of |T| - 1.
std::size_t twin_lower_bound(const TwinClasses& tc);

/// Exact metric dimension by branch and bound. Requires n >= 2.
std::size_t metric_dimension(const PairSystem& ps, const TwinClasses& tc,
                             const SearchBudget& budget = {});

/// Every resolving set of exactly `dim` vertices, in lexicographic order.
std::vector<VertexSet> enumerate_metric_bases(const PairSystem& ps, const TwinClasses& tc,
                                              std::size_t dim, const SearchBudget& budget = {});

/// Whether some resolving set of size `k` exists.
bool has_resolving_set_of_size(const PairSystem& ps, const TwinClasses& tc, std::size_t k,
                               const SearchBudget& budget = {});

enum class VertexClass { BasisForced, Void, Flexible };

const char* to_string(VertexClass c);

struct Classification {
  std::vector<VertexClass> of;
  VertexSet basis_forced;
  VertexSet void_vertices;
  VertexSet flexible;
};

/// Intersection of the bases is BasisForced, the complement of their union is
/// Void, the rest Flexible. Throws std::invalid_argument on an empty list.
Classification classify_vertices(std::span<const VertexSet> bases, std::size_t n);

/// (r \ {old}) u {replacement}. Throws std::invalid_argument if old is not in r.
VertexSet replace(std::span<const Vertex> r, Vertex old, Vertex replacement);

struct ResolvingAnalysis {
  std::size_t dim = 0;
  std::vector<VertexSet> bases;
  Classification classification;

  std::size_t basis_forced_count() const noexcept { return classification.basis_forced.size(); }
};

/// Full pipeline: distances, pair system, dimension, all bases, classes.
/// Throws DisconnectedGraph, UnsupportedInput (n < 2 or n > 64) and
/// SearchBudgetExceeded.
ResolvingAnalysis analyze(const Graph& g, const SearchBudget& budget = {});

}  // namespace mbasis
