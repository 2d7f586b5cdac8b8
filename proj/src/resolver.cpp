#include "mbasis/resolver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mbasis/errors.hpp"

namespace mbasis {

PairSystem PairSystem::build(const DistanceMatrix& dm) {
  PairSystem ps;
  const std::size_t n = dm.order();
  ps.n_ = n;
  ps.pairs_.reserve(n * (n - (n > 0)) / 2);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) ps.pairs_.emplace_back(x, y);
  }
  const std::size_t pc = ps.pairs_.size();
  ps.words_ = (pc + 63) / 64;
  ps.masks_.assign(n * ps.words_, 0);
  ps.coverers_.assign(pc, {});
  for (Vertex w = 0; w < n; ++w) {
    const auto row = dm.row(w);
    std::uint64_t* mask = ps.masks_.data() + static_cast<std::size_t>(w) * ps.words_;
    for (std::size_t p = 0; p < pc; ++p) {
      const auto [x, y] = ps.pairs_[p];
      if (row[x] != row[y]) {
        mask[p >> 6] |= std::uint64_t{1} << (p & 63);
        ps.coverers_[p].push_back(w);
      }
    }
  }
  return ps;
}

std::size_t PairSystem::pair_index(Vertex x, Vertex y) const {
  if (x == y || x >= n_ || y >= n_) throw std::out_of_range("pair_index: invalid pair");
  if (x > y) std::swap(x, y);
  const std::size_t xs = x;
  return xs * n_ - xs * (xs + 1) / 2 + (y - x - 1);
}

namespace {

void check_members(std::span<const Vertex> r, std::size_t n) {
  for (Vertex v : r) {
    if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

bool PairSystem::is_resolving(std::span<const Vertex> r) const {
  return unresolved_pairs(r).empty();
}

std::vector<std::pair<Vertex, Vertex>> PairSystem::unresolved_pairs(std::span<const Vertex> r) const {
  check_members(r, n_);
  std::vector<std::uint64_t> covered(words_, 0);
  for (Vertex v : r) {
    const auto m = mask(v);
    for (std::size_t i = 0; i < words_; ++i) covered[i] |= m[i];
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (!((covered[p >> 6] >> (p & 63)) & 1u)) out.push_back(pairs_[p]);
  }
  return out;
}

bool is_resolving(const DistanceMatrix& dm, std::span<const Vertex> r) {
  return unresolved_pairs(dm, r).empty();
}

std::vector<std::pair<Vertex, Vertex>> unresolved_pairs(const DistanceMatrix& dm,
                                                        std::span<const Vertex> r) {
  check_members(r, dm.order());
  std::vector<std::pair<Vertex, Vertex>> out;
  const std::size_t n = dm.order();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      bool separated = false;
      for (Vertex w : r) {
        if (dm(w, x) != dm(w, y)) {
          separated = true;
          break;
        }
      }
      if (!separated) out.emplace_back(x, y);
    }
  }
  return out;
}

std::size_t twin_lower_bound(const TwinClasses& tc) {
  std::size_t total = 0;
  for (const auto& c : tc.classes) {
    if (c.members.size() >= 2) total += c.members.size() - 1;
  }
  return total;
}

namespace {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

VertexSet to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// Branch and bound over the pair-cover instance.
///
/// Every node picks the uncovered pair with the fewest admissible coverers and
/// branches on each coverer v_i, excluding v_1..v_{i-1} in branch i. The
/// branches partition the solution space, so enumeration yields each set once.
class CoverSearch {
 public:
  CoverSearch(const PairSystem& ps, const TwinClasses& tc, const SearchBudget& budget)
      : ps_(ps),
        budget_(budget),
        batch_(std::clamp<std::uint64_t>(budget.max_nodes, 1, 1024)),
        start_(std::chrono::steady_clock::now()) {
    const std::size_t n = ps.order();
    if (n > kMaxSearchOrder) {
      throw UnsupportedInput("exact search supports at most " + std::to_string(kMaxSearchOrder) +
                             " vertices, got " + std::to_string(n));
    }
    all_ = n == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n)) - 1);
    words_ = ps.words();
    pair_count_ = ps.pair_count();
    coverer_mask_.resize(pair_count_);
    for (std::size_t p = 0; p < pair_count_; ++p) {
      for (Vertex v : ps.coverers(p)) coverer_mask_[p] |= bit(v);
    }
    packing_order_.resize(pair_count_);
    for (std::size_t p = 0; p < pair_count_; ++p) packing_order_[p] = p;
    std::stable_sort(packing_order_.begin(), packing_order_.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(coverer_mask_[a]) < std::popcount(coverer_mask_[b]);
    });
    tail_mask_ = (pair_count_ % 64) ? (Mask{1} << (pair_count_ % 64)) - 1 : ~Mask{0};
    for (const auto& c : tc.classes) {
      if (c.members.size() < 2) continue;
      Mask m = 0;
      for (Vertex v : c.members) m |= bit(v);
      twins_.push_back({m, c.members.size() - 1});
    }
  }

  std::uint64_t nodes() const { return nodes_.load(); }

  bool exists(std::size_t k) {
    Mode mode{false, k};
    run(mode);
    return found_.load();
  }

  std::vector<VertexSet> enumerate(std::size_t k) {
    Mode mode{true, k};
    run(mode);
    std::vector<VertexSet> out;
    out.reserve(results_.size());
    for (Mask m : results_) out.push_back(to_set(m));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool aborted() const { return aborted_.load(); }

 private:
  struct Mode {
    bool enumerate;
    std::size_t k;
  };

  struct Worker {
    std::vector<Mask> covered;  // (k + 2) * words, one row per depth
    std::vector<Mask> results;
    std::uint64_t pending_nodes = 0;
  };

  struct TwinConstraint {
    Mask members;
    std::size_t need;
  };

  void run(const Mode& mode) {
    found_ = false;
    results_.clear();
    if (mode.k > ps_.order()) return;

    Worker root = make_worker(mode);
    // Root: nothing chosen, nothing covered.
    std::fill(root.covered.begin(), root.covered.begin() + static_cast<std::ptrdiff_t>(words_), 0);

    const unsigned threads = std::max(1u, budget_.threads);
    if (threads == 1 || pair_count_ == 0) {
      dfs(root, mode, 0, 0, 0);
      flush(root);
      results_ = std::move(root.results);
    } else {
      run_parallel(mode, threads);
    }
    if (aborted_) throw SearchBudgetExceeded(mode.k, mode.k, nodes_.load());
  }

  void run_parallel(const Mode& mode, unsigned threads) {
    // Split on the root branching pair; branch i excludes the first i coverers.
    Worker probe = make_worker(mode);
    std::fill(probe.covered.begin(), probe.covered.end(), 0);
    const std::size_t p = pick_pair(probe.covered.data(), all_);
    std::vector<Vertex> branches = to_set(coverer_mask_[p]);
    if (mode.k == 0) return;

    std::atomic<std::size_t> next{0};
    std::mutex merge;
    auto work = [&] {
      Worker w = make_worker(mode);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branches.size() || aborted_ || (!mode.enumerate && found_)) break;
        Mask excluded = 0;
        for (std::size_t j = 0; j < i; ++j) excluded |= bit(branches[j]);
        const Vertex v = branches[i];
        const auto m = ps_.mask(v);
        std::copy(m.begin(), m.end(), w.covered.begin() + static_cast<std::ptrdiff_t>(words_));
        dfs(w, mode, 1, bit(v), excluded);
      }
      flush(w);
      std::lock_guard lock(merge);
      results_.insert(results_.end(), w.results.begin(), w.results.end());
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  Worker make_worker(const Mode& mode) const {
    Worker w;
    w.covered.assign((mode.k + 2) * std::max<std::size_t>(words_, 1), 0);
    return w;
  }

  void flush(Worker& w) {
    nodes_ += w.pending_nodes;
    w.pending_nodes = 0;
  }

  bool tick(Worker& w) {
    if (++w.pending_nodes >= batch_) {
      const auto total = nodes_.fetch_add(w.pending_nodes) + w.pending_nodes;
      w.pending_nodes = 0;
      if (total > budget_.max_nodes ||
          std::chrono::steady_clock::now() - start_ > budget_.max_time) {
        aborted_ = true;
      }
    }
    return !aborted_.load(std::memory_order_relaxed);
  }

  std::size_t uncovered_count(const Mask* covered) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i + 1 < words_; ++i) c += 64 - std::popcount(covered[i]);
    if (words_) c += std::popcount(~covered[words_ - 1] & tail_mask_);
    return c;
  }

  Mask uncovered_word(const Mask* covered, std::size_t i) const {
    Mask u = ~covered[i];
    if (i + 1 == words_) u &= tail_mask_;
    return u;
  }

  /// Uncovered pair with the fewest admissible coverers, lowest index on ties.
  std::size_t pick_pair(const Mask* covered, Mask allowed) const {
    std::size_t best = SIZE_MAX;
    int best_count = INT32_MAX;
    for (std::size_t i = 0; i < words_; ++i) {
      for (Mask u = uncovered_word(covered, i); u; u &= u - 1) {
        const std::size_t p = i * 64 + static_cast<std::size_t>(std::countr_zero(u));
        const int c = std::popcount(coverer_mask_[p] & allowed);
        if (c < best_count) {
          best_count = c;
          best = p;
          if (c == 0) return best;
        }
      }
    }
    return best;
  }

  /// Lower bound on the number of further vertices needed; SIZE_MAX if none
  /// suffices.
  std::size_t lower_bound(const Mask* covered, Mask chosen, Mask allowed, std::size_t uncovered,
                          std::size_t remaining) const {
    std::size_t deficit = 0;
    for (const auto& t : twins_) {
      const std::size_t have = static_cast<std::size_t>(std::popcount(t.members & chosen));
      if (have >= t.need) continue;
      const std::size_t need = t.need - have;
      if (static_cast<std::size_t>(std::popcount(t.members & allowed)) < need) return SIZE_MAX;
      deficit += need;
    }
    if (deficit > remaining) return deficit;

    std::size_t best_cover = 0;
    for (Mask a = allowed; a; a &= a - 1) {
      const auto m = ps_.mask(static_cast<Vertex>(std::countr_zero(a)));
      std::size_t c = 0;
      for (std::size_t i = 0; i < words_; ++i) c += std::popcount(m[i] & ~covered[i]);
      best_cover = std::max(best_cover, c);
    }
    if (best_cover == 0) return SIZE_MAX;
    std::size_t bound = std::max(deficit, (uncovered + best_cover - 1) / best_cover);
    if (bound > remaining) return bound;

    // Pairs whose admissible coverer sets are pairwise disjoint each need
    // their own vertex.
    Mask used = 0;
    std::size_t packed = 0;
    for (std::size_t p : packing_order_) {
      if ((covered[p >> 6] >> (p & 63)) & 1u) continue;
      const Mask avail = coverer_mask_[p] & allowed;
      if ((avail & used) == 0) {
        used |= avail;
        if (++packed > remaining) break;
      }
    }
    return std::max(bound, packed);
  }

  /// Returns true to stop the search (exists mode found a set).
  bool dfs(Worker& w, const Mode& mode, std::size_t depth, Mask chosen, Mask excluded) {
    if (!tick(w)) return true;
    const Mask* covered = w.covered.data() + depth * words_;
    const std::size_t size = static_cast<std::size_t>(std::popcount(chosen));
    const std::size_t uncovered = uncovered_count(covered);
    const Mask allowed = all_ & ~chosen & ~excluded;

    if (uncovered == 0) {
      if (!mode.enumerate) {
        found_ = true;
        return true;
      }
      pad(w, chosen, allowed, mode.k - size);
      return false;
    }
    if (size >= mode.k) return false;
    const std::size_t remaining = mode.k - size;
    if (lower_bound(covered, chosen, allowed, uncovered, remaining) > remaining) return false;

    const std::size_t p = pick_pair(covered, allowed);
    Mask candidates = coverer_mask_[p] & allowed;
    Mask branch_excluded = excluded;
    Mask* next = w.covered.data() + (depth + 1) * words_;
    while (candidates) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      const auto m = ps_.mask(v);
      for (std::size_t i = 0; i < words_; ++i) next[i] = covered[i] | m[i];
      if (dfs(w, mode, depth + 1, chosen | bit(v), branch_excluded)) return true;
      branch_excluded |= bit(v);
    }
    return false;
  }

  /// All ways to extend a complete cover with `extra` admissible vertices.
  void pad(Worker& w, Mask chosen, Mask allowed, std::size_t extra) {
    if (extra == 0) {
      w.results.push_back(chosen);
      return;
    }
    if (static_cast<std::size_t>(std::popcount(allowed)) < extra) return;
    const Vertex v = static_cast<Vertex>(std::countr_zero(allowed));
    const Mask rest = allowed & ~bit(v);
    pad(w, chosen | bit(v), rest, extra - 1);
    pad(w, chosen, rest, extra);
  }

  const PairSystem& ps_;
  SearchBudget budget_;
  std::uint64_t batch_;
  std::chrono::steady_clock::time_point start_;
  Mask all_ = 0;
  Mask tail_mask_ = 0;
  std::size_t words_ = 0;
  std::size_t pair_count_ = 0;
  std::vector<Mask> coverer_mask_;
  std::vector<std::size_t> packing_order_;
  std::vector<TwinConstraint> twins_;

  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
  std::atomic<bool> found_{false};
  std::vector<Mask> results_;
};

std::size_t minimum(CoverSearch& search, const PairSystem& ps, const TwinClasses& tc) {
  const std::size_t n = ps.order();
  if (n < 2) throw UnsupportedInput("metric dimension needs at least 2 vertices");
  const std::size_t start = std::max<std::size_t>(1, twin_lower_bound(tc));
  for (std::size_t k = start; k < n; ++k) {
    try {
      if (search.exists(k)) return k;
    } catch (const SearchBudgetExceeded& e) {
      throw SearchBudgetExceeded(k, n - 1, e.nodes());
    }
  }
  // V \ {v} always resolves, so the loop returns by k = n - 1.
  return n - 1;
}

}  // namespace

std::size_t metric_dimension(const PairSystem& ps, const TwinClasses& tc, const SearchBudget& budget) {
  CoverSearch search(ps, tc, budget);
  return minimum(search, ps, tc);
}

std::vector<VertexSet> enumerate_metric_bases(const PairSystem& ps, const TwinClasses& tc,
                                              std::size_t dim, const SearchBudget& budget) {
  CoverSearch search(ps, tc, budget);
  return search.enumerate(dim);
}

bool has_resolving_set_of_size(const PairSystem& ps, const TwinClasses& tc, std::size_t k,
                               const SearchBudget& budget) {
  CoverSearch search(ps, tc, budget);
  return search.exists(k);
}

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::BasisForced:
      return "basis_forced";
    case VertexClass::Void:
      return "void";
    case VertexClass::Flexible:
      return "flexible";
  }
  return "?";
}

Classification classify_vertices(std::span<const VertexSet> bases, std::size_t n) {
  if (bases.empty()) throw std::invalid_argument("classify_vertices: empty basis list");
  std::vector<std::size_t> count(n, 0);
  for (const auto& b : bases) {
    for (Vertex v : b) {
      if (v >= n) throw std::out_of_range("classify_vertices: vertex out of range");
      ++count[v];
    }
  }
  Classification c;
  c.of.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (count[v] == bases.size()) {
      c.of[v] = VertexClass::BasisForced;
      c.basis_forced.push_back(v);
    } else if (count[v] == 0) {
      c.of[v] = VertexClass::Void;
      c.void_vertices.push_back(v);
    } else {
      c.of[v] = VertexClass::Flexible;
      c.flexible.push_back(v);
    }
  }
  return c;
}

VertexSet replace(std::span<const Vertex> r, Vertex old, Vertex replacement) {
  if (std::find(r.begin(), r.end(), old) == r.end()) {
    throw std::invalid_argument("replace: vertex " + std::to_string(old) + " is not in the set");
  }
  VertexSet out;
  for (Vertex v : r) {
    if (v != old) out.push_back(v);
  }
  out.push_back(replacement);
  return make_vertex_set(std::move(out));
}

ResolvingAnalysis analyze(const Graph& g, const SearchBudget& budget) {
  if (!is_connected(g)) throw DisconnectedGraph("analyze: graph is not connected");
  if (g.order() < 2) {
    throw UnsupportedInput("analyze: graphs with fewer than 2 vertices have no agreed metric dimension");
  }
  if (g.order() > kMaxSearchOrder) {
    throw UnsupportedInput("analyze: at most " + std::to_string(kMaxSearchOrder) + " vertices supported");
  }
  const DistanceMatrix dm = distance_matrix(g);
  const PairSystem ps = PairSystem::build(dm);
  const TwinClasses tc = twin_classes(g);

  CoverSearch search(ps, tc, budget);
  ResolvingAnalysis a;
  a.dim = minimum(search, ps, tc);
  try {
    a.bases = search.enumerate(a.dim);
  } catch (const SearchBudgetExceeded& e) {
    throw SearchBudgetExceeded(a.dim, a.dim, e.nodes());
  }
  a.classification = classify_vertices(a.bases, g.order());
  return a;
}

}  // namespace mbasis
