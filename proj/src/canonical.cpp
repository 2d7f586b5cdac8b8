#include "mbasis/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mbasis/errors.hpp"

namespace mbasis {

namespace {

// Equitable-ish colouring by iterated degree refinement. Colours are ranks of
// structural keys, so they do not depend on the input labelling.
std::vector<std::size_t> refine(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      keys[v].first = colour[v];
      for (Vertex w : g.neighbours(v)) keys[v].second.push_back(colour[w]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> rank;
    for (const auto& k : keys) rank.emplace(k, 0);
    std::size_t r = 0;
    for (auto& [k, value] : rank) value = r++;
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) next[v] = rank[keys[v]];
    const bool stable = r == std::set<std::size_t>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw UnsupportedInput("canonical_form supports at most " +
                           std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  const auto colour = refine(g);
  std::size_t num_colours = 0;
  for (auto c : colour) num_colours = std::max(num_colours, c + 1);
  std::vector<std::vector<Vertex>> cells(num_colours);
  for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);

  std::vector<Vertex> order;
  order.reserve(n);
  std::uint64_t best = UINT64_MAX;

  auto encode = [&] {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
      }
    }
    return code;
  };

  auto place = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, encode());
      return;
    }
    auto members = cells[cell];
    do {
      order.insert(order.end(), members.begin(), members.end());
      self(self, cell + 1);
      order.resize(order.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  place(place, 0);
  return {n, n == 0 ? 0 : best};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace mbasis
