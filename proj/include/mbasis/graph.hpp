#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mbasis {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over vertices 0..n-1. Immutable once built.
///
/// Optional labels give vertices display names ("v3", "T^1_2", "w"); ids stay
/// dense so the search code never touches strings.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Duplicated edges (in either orientation) are merged. Throws InvalidGraph
  /// on an endpoint >= n, a self-loop, or non-unique labels.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges,
                              std::vector<std::string> labels = {});
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges,
                              std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// The label when present, otherwise the decimal id.
  std::string name(Vertex v) const;
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find() but throws InvalidGraph for an unknown label.
  Vertex at(std::string_view label) const;

  Graph with_labels(std::vector<std::string> labels) const;
  Graph without_labels() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t order() const noexcept { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const std::uint32_t> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  std::uint32_t diameter() const;

 private:
  friend DistanceMatrix distance_matrix(const Graph& g);

  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// BFS from every vertex. Throws DisconnectedGraph.
DistanceMatrix distance_matrix(const Graph& g);

enum class TwinKind { Singleton, TrueTwin, FalseTwin };

struct TwinClass {
  TwinKind kind = TwinKind::Singleton;
  VertexSet members;
};

/// Partition of V(G) into maximal true-twin (equal N[v]) and false-twin
/// (equal N(v)) classes; every other vertex is a singleton.
struct TwinClasses {
  std::vector<TwinClass> classes;
  std::vector<std::size_t> class_of;
};

struct DisjointUnion {
  Graph graph;
  /// offsets[i] is the id in `graph` of vertex 0 of part i.
  std::vector<Vertex> offsets;
};

/// Graph plus the map from its compacted ids back to the source graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;
};

Graph complement(const Graph& g);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

/// Parts are relabelled by cumulative offset. Labels are carried over; when
/// that would produce duplicates, every label gets a "^k" suffix naming its
/// (1-based) part.
DisjointUnion disjoint_union(std::span<const Graph> parts);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Throws DisconnectedGraph.
VertexSet cut_vertices(const Graph& g);
VertexSet pendants(const Graph& g);
VertexSet universal_vertices(const Graph& g);

/// Both throw DisconnectedGraph.
bool is_path(const Graph& g);
bool is_unicyclic(const Graph& g);
bool is_tree(const Graph& g);

TwinClasses twin_classes(const Graph& g);

Subgraph remove_vertex(const Graph& g, Vertex v);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Sorted copy without duplicates.
VertexSet make_vertex_set(std::vector<Vertex> vs);
bool contains(std::span<const Vertex> set, Vertex v);

}  // namespace mbasis
