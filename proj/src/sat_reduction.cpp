#include "mbasis/sat_reduction.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "mbasis/errors.hpp"

namespace mbasis {

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> current;
  std::size_t line_no = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '%') continue;
    const std::string where = "DIMACS line " + std::to_string(line_no) + ": ";
    if (first == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (have_header || !(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError(where + "bad problem line");
      }
      have_header = true;
      f.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) throw ParseError(where + "clause before the \"p cnf\" header");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      long long lit = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(where + "bad literal '" + tok + "'");
      }
      if (lit == 0) {
        if (current.size() != 3) {
          throw ParseError(where + "clause has " + std::to_string(current.size()) +
                           " literals, expected exactly 3");
        }
        f.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > f.num_vars) throw ParseError(where + "variable " + std::to_string(var) + " exceeds the header");
      current.push_back({static_cast<std::uint32_t>(var - 1), lit > 0});
    }
  }
  if (!have_header) throw ParseError("DIMACS: missing \"p cnf\" header");
  if (!current.empty()) throw ParseError("DIMACS: last clause is not terminated by 0");
  if (f.clauses.size() != declared_clauses) {
    throw ParseError("DIMACS: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& l : c) os << (l.positive ? "" : "-") << l.var + 1 << ' ';
    os << "0\n";
  }
  return os.str();
}

std::ptrdiff_t first_falsified_clause(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (assignment.size() != f.num_vars) throw std::invalid_argument("assignment length differs from num_vars");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const bool sat = std::any_of(f.clauses[j].begin(), f.clauses[j].end(),
                                 [&](const Literal& l) { return assignment[l.var] == l.positive; });
    if (!sat) return static_cast<std::ptrdiff_t>(j);
  }
  return -1;
}

bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment) {
  return first_falsified_clause(f, assignment) < 0;
}

ReductionGraph sat_reduction(const CnfFormula& f) {
  const std::size_t n = f.num_vars;
  const std::size_t m = f.clauses.size();
  for (std::size_t j = 0; j < m; ++j) {
    const auto& c = f.clauses[j];
    for (const auto& l : c) {
      if (l.var >= n) {
        throw ConstructionError(ConstructionError::Kind::MalformedClause,
                                "clause " + std::to_string(j + 1) + " names a variable outside 1.." +
                                    std::to_string(n));
      }
    }
    if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) {
      throw ConstructionError(ConstructionError::Kind::MalformedClause,
                              "clause " + std::to_string(j + 1) + " repeats a variable");
    }
  }

  ReductionGraph rg;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto add = [&](std::string label) {
    labels.push_back(std::move(label));
    return static_cast<Vertex>(labels.size() - 1);
  };

  for (int k = 0; k < 2; ++k) {
    const std::string K = std::to_string(k + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string I = std::to_string(i + 1);
      VariableGadget g{};
      g.a1 = add("a^" + K + "_{" + I + ",1}");
      g.a2 = add("a^" + K + "_{" + I + ",2}");
      g.b1 = add("b^" + K + "_{" + I + ",1}");
      g.b2 = add("b^" + K + "_{" + I + ",2}");
      g.t = add("T^" + K + "_" + I);
      g.f = add("F^" + K + "_" + I);
      edges.insert(edges.end(), {{g.a2, g.b2}, {g.b2, g.f}, {g.f, g.b1}, {g.b1, g.a1}, {g.a1, g.t}, {g.t, g.a2}});
      rg.variables[k].push_back(g);
    }
    for (std::size_t j = 0; j < m; ++j) {
      ClauseGadget c{};
      for (std::size_t l = 0; l < 5; ++l) {
        c.c[l] = add("c^" + K + "_{" + std::to_string(j + 1) + "," + std::to_string(l + 1) + "}");
      }
      edges.insert(edges.end(), {{c.c[1], c.c[0]}, {c.c[1], c.c[2]}, {c.c[1], c.c[3]}, {c.c[1], c.c[4]}});
      const Clause& clause = f.clauses[j];
      for (std::size_t i = 0; i < n; ++i) {
        const VariableGadget& g = rg.variables[k][i];
        const auto lit = std::find_if(clause.begin(), clause.end(), [&](const Literal& l) { return l.var == i; });
        if (lit == clause.end()) {
          edges.insert(edges.end(), {{c.c[2], g.t}, {c.c[2], g.f}});
        } else {
          edges.push_back({c.c[2], lit->positive ? g.f : g.t});
          edges.insert(edges.end(), {{c.c[0], g.t}, {c.c[0], g.f}});
        }
      }
      rg.clauses[k].push_back(c);
    }
  }
  for (int k = 0; k < 2; ++k) {
    for (const ClauseGadget& c : rg.clauses[k]) {
      for (const VariableGadget& g : rg.variables[1 - k]) {
        edges.insert(edges.end(), {{c.c[0], g.t}, {c.c[0], g.f}, {c.c[2], g.t}, {c.c[2], g.f}});
      }
    }
  }
  rg.w = add("w");
  for (int k = 0; k < 2; ++k) {
    for (const ClauseGadget& c : rg.clauses[k]) edges.push_back({rg.w, c.c[2]});
  }
  const std::size_t order = labels.size();
  rg.graph = Graph::from_edge_list(order, edges, std::move(labels));
  return rg;
}

VertexSet satisfiable_side_certificate(const ReductionGraph& rg, const std::vector<bool>& assignment) {
  if (assignment.size() != rg.variables[0].size()) {
    throw std::invalid_argument("assignment length differs from the number of variables");
  }
  std::vector<Vertex> out;
  for (int k = 0; k < 2; ++k) {
    for (const auto& c : rg.clauses[k]) out.push_back(c.c[3]);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      out.push_back(assignment[i] ? rg.variables[k][i].a1 : rg.variables[k][i].b1);
    }
  }
  return make_vertex_set(std::move(out));
}

VertexSet universal_certificate(const ReductionGraph& rg) {
  std::vector<Vertex> out{rg.w};
  for (int k = 0; k < 2; ++k) {
    for (const auto& c : rg.clauses[k]) out.push_back(c.c[3]);
    for (const auto& g : rg.variables[k]) out.push_back(g.a1);
  }
  return make_vertex_set(std::move(out));
}

}  // namespace mbasis
