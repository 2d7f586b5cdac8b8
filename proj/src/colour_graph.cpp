#include "mbasis/colour_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mbasis {

std::optional<Vertex> ColourGraph::colour(Vertex x, Vertex y) const {
  if (x >= n_ || y >= n_) throw std::out_of_range("colour: vertex out of range");
  const std::int32_t c = colour_[static_cast<std::size_t>(x) * n_ + y];
  if (c < 0) return std::nullopt;
  return static_cast<Vertex>(c);
}

std::vector<ColourEdge> ColourGraph::edges_of(Vertex colour) const {
  std::vector<ColourEdge> out;
  for (const auto& e : edges_) {
    if (e.colour == colour) out.push_back(e);
  }
  return out;
}

ColourGraph build_colour_graph(const DistanceMatrix& dm, std::span<const Vertex> r) {
  if (r.empty()) throw std::invalid_argument("build_colour_graph: empty reference set");
  const std::size_t n = dm.order();
  ColourGraph cg;
  cg.n_ = n;
  cg.r_ = make_vertex_set({r.begin(), r.end()});
  if (cg.r_.back() >= n) throw std::out_of_range("build_colour_graph: vertex out of range");
  cg.colour_.assign(n * n, -1);
  cg.resolving_ = true;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      std::size_t separators = 0;
      Vertex only = 0;
      for (Vertex t : cg.r_) {
        if (dm(t, x) != dm(t, y)) {
          only = t;
          if (++separators > 1) break;
        }
      }
      if (separators == 0) cg.resolving_ = false;
      if (separators == 1) {
        cg.edges_.push_back({x, y, only});
        cg.colour_[static_cast<std::size_t>(x) * n + y] = static_cast<std::int32_t>(only);
        cg.colour_[static_cast<std::size_t>(y) * n + x] = static_cast<std::int32_t>(only);
      }
    }
  }
  return cg;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Shortest path from x to y using only edges whose colour differs from c.
std::vector<Vertex> path_avoiding(const ColourGraph& cg, Vertex x, Vertex y, Vertex c) {
  const std::size_t n = cg.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : cg.edges()) {
    if (e.colour == c) continue;
    adj[e.x].push_back(e.y);
    adj[e.y].push_back(e.x);
  }
  std::vector<Vertex> prev(n, UINT32_MAX);
  std::vector<Vertex> queue{x};
  prev[x] = x;
  for (std::size_t i = 0; i < queue.size() && prev[y] == UINT32_MAX; ++i) {
    for (Vertex w : adj[queue[i]]) {
      if (prev[w] == UINT32_MAX) {
        prev[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = y; v != x; v = prev[v]) path.push_back(v);
  path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string join(std::span<const Vertex> vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

}  // namespace

PropertyCheck check_cycle_property(const ColourGraph& cg) {
  PropertyCheck out{"cycle_property", true, {}, ""};
  for (Vertex c : cg.reference()) {
    UnionFind uf(cg.order());
    for (const auto& e : cg.edges()) {
      if (e.colour != c) uf.unite(e.x, e.y);
    }
    for (const auto& e : cg.edges()) {
      if (e.colour == c && uf.find(e.x) == uf.find(e.y)) {
        out.passed = false;
        out.witness = path_avoiding(cg, e.x, e.y, c);
        out.detail = "colour " + std::to_string(c) + " appears once on the cycle " + join(out.witness);
        return out;
      }
    }
  }
  return out;
}

PropertyCheck check_transitivity(const ColourGraph& cg) {
  if (!cg.resolving()) {
    throw std::invalid_argument("check_transitivity: the reference set does not resolve the graph");
  }
  PropertyCheck out{"transitivity", true, {}, ""};
  const std::size_t n = cg.order();
  std::vector<std::vector<std::pair<Vertex, Vertex>>> incident(n);  // (other end, colour)
  for (const auto& e : cg.edges()) {
    incident[e.x].push_back({e.y, e.colour});
    incident[e.y].push_back({e.x, e.colour});
  }
  for (Vertex x = 0; x < n; ++x) {
    const auto& inc = incident[x];
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (inc[i].second != inc[j].second) continue;
        const auto c = cg.colour(inc[i].first, inc[j].first);
        if (c != inc[i].second) {
          out.passed = false;
          out.witness = {x, inc[i].first, inc[j].first};
          out.detail = "edges " + std::to_string(x) + "-" + std::to_string(inc[i].first) + " and " +
                       std::to_string(x) + "-" + std::to_string(inc[j].first) + " share colour " +
                       std::to_string(inc[i].second) + " but the closing edge does not";
          return out;
        }
      }
    }
  }
  return out;
}

PropertyCheck check_forced_colour_counts(const ColourGraph& cg, std::span<const Vertex> forced) {
  PropertyCheck out{"forced_colour_counts", true, {}, ""};
  for (Vertex b : forced) {
    if (!contains(cg.reference(), b)) continue;
    const auto count = cg.edges_of(b).size();
    if (count < 2) {
      out.passed = false;
      out.witness = {b};
      out.detail = "colour " + std::to_string(b) + " has " + std::to_string(count) + " edge(s)";
      return out;
    }
  }
  return out;
}

PropertyCheck check_forced_outside_edges(const ColourGraph& cg, std::span<const Vertex> forced) {
  PropertyCheck out{"forced_outside_edges", true, {}, ""};
  for (Vertex b : forced) {
    if (!contains(cg.reference(), b)) continue;
    const auto es = cg.edges_of(b);
    const bool found = std::any_of(es.begin(), es.end(), [&](const ColourEdge& e) {
      return !contains(cg.reference(), e.x) && !contains(cg.reference(), e.y);
    });
    if (!found) {
      out.passed = false;
      out.witness = {b};
      out.detail = "no edge of colour " + std::to_string(b) + " avoids the reference set";
      return out;
    }
  }
  return out;
}

PropertyCheck check_every_colour_present(const ColourGraph& cg) {
  PropertyCheck out{"every_colour_present", true, {}, ""};
  for (Vertex r : cg.reference()) {
    if (cg.edges_of(r).empty()) {
      out.passed = false;
      out.witness = {r};
      out.detail = "colour " + std::to_string(r) + " has no edge";
      return out;
    }
  }
  return out;
}

PropertyCheck check_reference_independent(const ColourGraph& cg) {
  PropertyCheck out{"reference_independent", true, {}, ""};
  for (const auto& e : cg.edges()) {
    if (contains(cg.reference(), e.x) && contains(cg.reference(), e.y)) {
      out.passed = false;
      out.witness = {e.x, e.y};
      out.detail = "edge " + std::to_string(e.x) + "-" + std::to_string(e.y) + " joins two reference vertices";
      return out;
    }
  }
  return out;
}

PropertyCheck check_incident_colours(const ColourGraph& cg) {
  PropertyCheck out{"incident_colours", true, {}, ""};
  for (const auto& e : cg.edges()) {
    for (Vertex end : {e.x, e.y}) {
      if (contains(cg.reference(), end) && e.colour != end) {
        out.passed = false;
        out.witness = {e.x, e.y, e.colour};
        out.detail = "edge at reference vertex " + std::to_string(end) + " has colour " +
                     std::to_string(e.colour);
        return out;
      }
    }
  }
  return out;
}

std::vector<VertexSet> monochromatic_components(const ColourGraph& cg, Vertex colour) {
  const auto es = cg.edges_of(colour);
  UnionFind uf(cg.order());
  std::vector<bool> touched(cg.order(), false);
  for (const auto& e : es) {
    uf.unite(e.x, e.y);
    touched[e.x] = touched[e.y] = true;
  }
  std::vector<VertexSet> comps;
  std::vector<std::size_t> index(cg.order(), SIZE_MAX);
  for (Vertex v = 0; v < cg.order(); ++v) {
    if (!touched[v]) continue;
    const std::size_t root = uf.find(v);
    if (index[root] == SIZE_MAX) {
      index[root] = comps.size();
      comps.emplace_back();
    }
    comps[index[root]].push_back(v);
  }
  for (const auto& comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        if (cg.colour(comp[i], comp[j]) != colour) {
          throw NotAClique("colour " + std::to_string(colour) + " component {" + join(comp) +
                               "} is not a clique",
                           {comp[i], comp[j]});
        }
      }
    }
  }
  return comps;
}

std::string colour_graph_to_dot(const ColourGraph& cg, const Graph& g) {
  static constexpr const char* kPalette[] = {"red",    "blue",  "darkgreen", "orange", "purple",
                                             "brown",  "cyan",  "magenta",   "gold",   "gray40",
                                             "navy",   "olive", "teal",      "maroon", "pink",
                                             "violet"};
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
  const auto& r = cg.reference();
  auto colour_name = [&](Vertex c) {
    const auto pos = static_cast<std::size_t>(std::lower_bound(r.begin(), r.end(), c) - r.begin());
    return kPalette[pos % kPaletteSize];
  };
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "graph G_R {\n";
  for (Vertex v = 0; v < cg.order(); ++v) {
    os << "  " << v << " [label=" << quoted(g.name(v));
    if (contains(r, v)) os << ", shape=box, color=" << colour_name(v) << ", penwidth=2";
    os << "];\n";
  }
  for (const auto& e : cg.edges()) {
    os << "  " << e.x << " -- " << e.y << " [color=" << colour_name(e.colour)
       << ", label=" << quoted(g.name(e.colour)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mbasis
