#include "mbasis/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mbasis/errors.hpp"

namespace mbasis {

namespace {

using json = nlohmann::json;

/// Splits into non-comment tokens, remembering the line of each.
struct Token {
  std::string_view text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && text[i] != '#' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({text.substr(start, i - start), line});
    }
  }
  return out;
}

std::size_t to_count(const Token& t) {
  std::size_t value = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("line " + std::to_string(t.line) + ": expected a non-negative integer, got '" +
                     std::string(t.text) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.size() < 2) throw ParseError("edge list: missing \"n m\" header");
  const std::size_t n = to_count(tokens[0]);
  const std::size_t m = to_count(tokens[1]);
  if (tokens.size() != 2 + 2 * m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges but " +
                     std::to_string(tokens.size() - 2) + " endpoint tokens follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t u = to_count(tokens[2 + 2 * i]);
    const std::size_t v = to_count(tokens[3 + 2 * i]);
    if (u >= n || v >= n) {
      throw InvalidGraph("line " + std::to_string(tokens[2 + 2 * i].line) + ": endpoint out of range 0.." +
                         std::to_string(n == 0 ? 0 : n - 1));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("n")) throw ParseError("graph JSON: missing \"n\"");
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: every edge must be [u, v]");
        edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      const auto& l = j.at("labels");
      if (l.is_array()) {
        labels = l.get<std::vector<std::string>>();
      } else if (l.is_object()) {
        labels.resize(n);
        for (Vertex v = 0; v < n; ++v) labels[v] = std::to_string(v);
        for (const auto& [key, value] : l.items()) {
          std::size_t v = 0;
          const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
          if (ec != std::errc{} || ptr != key.data() + key.size() || v >= n) {
            throw ParseError("graph JSON: bad label key '" + key + "'");
          }
          labels[v] = value.get<std::string>();
        }
      } else {
        throw ParseError("graph JSON: \"labels\" must be an object or an array");
      }
    }
    return Graph::from_edge_list(n, edges, std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

std::string to_graph_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  if (g.has_labels()) {
    json labels = json::object();
    for (Vertex v = 0; v < g.order(); ++v) labels[std::to_string(v)] = g.labels()[v];
    j["labels"] = labels;
  }
  return j.dump() + "\n";
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=" << json(g.name(v)).dump() << "];\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_graph_json(text);
    break;
  }
  return parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace mbasis
