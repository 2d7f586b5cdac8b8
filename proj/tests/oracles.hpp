#pragma once

// Slow, obviously-correct reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "mbasis/graph.hpp"

namespace oracle {

using mbasis::Graph;
using mbasis::Vertex;
using mbasis::VertexSet;

constexpr std::uint32_t kInf = 1u << 30;

/// Floyd-Warshall on the adjacency matrix.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v)) d[u][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Distance vectors to R are pairwise distinct.
inline bool resolves(const std::vector<std::vector<std::uint32_t>>& d, const VertexSet& r) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::uint32_t>> codes(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (Vertex w : r) codes[x].push_back(d[w][x]);
  }
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

/// Calls f on every k-subset of 0..n-1 in lexicographic order; stops early
/// when f returns false.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const VertexSet&)>& f) {
  if (k > n) return;
  VertexSet s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Vertex>(i);
  for (;;) {
    if (!f(s)) return;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Smallest k with a resolving k-subset, by brute force.
inline std::size_t metric_dimension(const Graph& g) {
  const auto d = floyd_warshall(g);
  for (std::size_t k = 1; k <= g.order(); ++k) {
    bool found = false;
    for_each_subset(g.order(), k, [&](const VertexSet& s) {
      found = resolves(d, s);
      return !found;
    });
    if (found) return k;
  }
  return g.order();
}

/// All resolving sets of the minimum size, lexicographic.
inline std::vector<VertexSet> metric_bases(const Graph& g) {
  const auto d = floyd_warshall(g);
  const std::size_t dim = metric_dimension(g);
  std::vector<VertexSet> out;
  for_each_subset(g.order(), dim, [&](const VertexSet& s) {
    if (resolves(d, s)) out.push_back(s);
    return true;
  });
  return out;
}

/// Vertices whose removal leaves more than one component.
inline VertexSet cut_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mbasis::connected_components(mbasis::remove_vertex(g, v).graph).size() > 1) out.push_back(v);
  }
  return out;
}

/// Every simple cycle as a closed vertex sequence (first vertex = smallest,
/// each cycle once per direction). Exponential; small graphs only.
inline std::vector<std::vector<Vertex>> simple_cycles(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [x, y] : edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on(n, false);
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex at) {
    for (Vertex w : adj[at]) {
      if (w == start && path.size() >= 3) out.push_back(path);
      if (w > start && !on[w]) {
        on[w] = true;
        path.push_back(w);
        dfs(start, w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = true;
    path = {s};
    dfs(s, s);
    on[s] = false;
  }
  return out;
}

}  // namespace oracle
