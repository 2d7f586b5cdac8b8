#include "mbasis/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

#include "mbasis/errors.hpp"

namespace mbasis {

namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.empty()) return;
  if (labels.size() != n) {
    throw InvalidGraph("label count " + std::to_string(labels.size()) + " does not match n = " +
                       std::to_string(n));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvalidGraph("duplicate vertex label '" + l + "'");
  }
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges,
                            std::vector<std::string> labels) {
  check_labels(labels, n);
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidGraph("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    degree_sum += nb.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<Edge> edges,
                            std::vector<std::string> labels) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::name(Vertex v) const {
  if (!labels_.empty()) return labels_.at(v);
  return std::to_string(v);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

Vertex Graph::at(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InvalidGraph("no vertex labelled '" + std::string(label) + "'");
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  check_labels(labels, order());
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::without_labels() const {
  Graph g = *this;
  g.labels_.clear();
  return g;
}

std::uint32_t DistanceMatrix::diameter() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t unseen = UINT32_MAX;
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.assign(n * n, unseen);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::uint32_t* row = dm.d_.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbours(u)) {
        if (row[w] == unseen) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) throw DisconnectedGraph();
  }
  return dm;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph::from_edge_list(n, edges, g.labels());
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidGraph("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edge_list(leaves + 1, edges);
}

DisjointUnion disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw InvalidGraph("disjoint union of an empty list");
  DisjointUnion out;
  std::vector<Edge> edges;
  std::size_t total = 0;
  bool any_labels = false;
  for (const Graph& part : parts) {
    out.offsets.push_back(static_cast<Vertex>(total));
    for (const Edge& e : part.edges()) {
      edges.push_back({static_cast<Vertex>(e.u + total), static_cast<Vertex>(e.v + total)});
    }
    total += part.order();
    any_labels = any_labels || part.has_labels();
  }

  std::vector<std::string> labels;
  if (any_labels) {
    for (const Graph& part : parts) {
      for (Vertex v = 0; v < part.order(); ++v) labels.push_back(part.name(v));
    }
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
      std::size_t at = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (Vertex v = 0; v < parts[i].order(); ++v) {
          labels[at++] += "^" + std::to_string(i + 1);
        }
      }
    }
  }
  out.graph = Graph::from_edge_list(total, edges, std::move(labels));
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbours(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() == 0 || connected_components(g).size() == 1;
}

namespace {

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw DisconnectedGraph(std::string(op) + ": graph is not connected");
}

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  const std::size_t n = g.order();
  if (n < 3) return {};
  // Hopcroft-Tarjan low-link, rooted at 0.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  std::function<void(Vertex, int)> dfs = [&](Vertex u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : g.neighbours(u)) {
      if (disc[w] == -1) {
        ++children;
        dfs(w, static_cast<int>(u));
        low[u] = std::min(low[u], low[w]);
        if (parent != -1 && low[w] >= disc[u]) cut[u] = true;
      } else if (static_cast<int>(w) != parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent == -1 && children > 1) cut[u] = true;
  };
  dfs(0, -1);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (cut[v]) out.push_back(v);
  }
  return out;
}

VertexSet pendants(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  if (g.order() < 2) return out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 == g.order()) out.push_back(v);
  }
  return out;
}

bool is_path(const Graph& g) {
  require_connected(g, "is_path");
  if (g.order() <= 1) return true;
  if (g.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_unicyclic(const Graph& g) {
  require_connected(g, "is_unicyclic");
  return g.order() >= 3 && g.size() == g.order();
}

bool is_tree(const Graph& g) {
  require_connected(g, "is_tree");
  return g.size() + 1 == g.order();
}

TwinClasses twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  TwinClasses tc;
  tc.class_of.assign(n, SIZE_MAX);

  auto group = [&](bool closed, TwinKind kind) {
    std::map<std::vector<Vertex>, VertexSet> by_fingerprint;
    for (Vertex v = 0; v < n; ++v) {
      if (tc.class_of[v] != SIZE_MAX) continue;
      std::vector<Vertex> key(g.neighbours(v).begin(), g.neighbours(v).end());
      if (closed) key.insert(std::upper_bound(key.begin(), key.end(), v), v);
      by_fingerprint[std::move(key)].push_back(v);
    }
    for (auto& [key, members] : by_fingerprint) {
      if (members.size() < 2) continue;
      for (Vertex v : members) tc.class_of[v] = tc.classes.size();
      tc.classes.push_back({kind, std::move(members)});
    }
  };
  // A vertex cannot have both a true twin and a false twin, so the order of
  // the two passes does not matter.
  group(true, TwinKind::TrueTwin);
  group(false, TwinKind::FalseTwin);

  for (Vertex v = 0; v < n; ++v) {
    if (tc.class_of[v] == SIZE_MAX) {
      tc.class_of[v] = tc.classes.size();
      tc.classes.push_back({TwinKind::Singleton, {v}});
    }
  }
  // Canonical order: by smallest member.
  std::vector<std::size_t> order(tc.classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tc.classes[a].members.front() < tc.classes[b].members.front();
  });
  TwinClasses sorted;
  sorted.class_of.assign(n, 0);
  for (std::size_t i : order) {
    for (Vertex v : tc.classes[i].members) sorted.class_of[v] = sorted.classes.size();
    sorted.classes.push_back(std::move(tc.classes[i]));
  }
  return sorted;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet keep = make_vertex_set({s.begin(), s.end()});
  if (!keep.empty() && keep.back() >= g.order()) {
    throw InvalidGraph("vertex " + std::to_string(keep.back()) + " out of range");
  }
  std::vector<Vertex> index(g.order(), UINT32_MAX);
  for (Vertex i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex w : g.neighbours(u)) {
      if (u < w && index[w] != UINT32_MAX) edges.push_back({index[u], index[w]});
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Vertex u : keep) labels.push_back(g.labels()[u]);
  }
  return {Graph::from_edge_list(keep.size(), edges, std::move(labels)), std::move(keep)};
}

Subgraph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw InvalidGraph("vertex " + std::to_string(v) + " out of range");
  VertexSet rest;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != v) rest.push_back(u);
  }
  return induced_subgraph(g, rest);
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(std::span<const Vertex> set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace mbasis
