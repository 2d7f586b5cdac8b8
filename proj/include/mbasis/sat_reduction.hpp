#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbasis/graph.hpp"

namespace mbasis {

struct Literal {
  /// 0-based variable index.
  std::uint32_t var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// A 3-CNF formula: every clause has exactly three literals.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
};

/// DIMACS CNF: optional "c" comment lines, a "p cnf <vars> <clauses>"
/// header, then clauses terminated by 0. Clauses that do not have exactly
/// three literals are rejected. Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

/// Whether the assignment (one bool per variable) satisfies every clause.
bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment);
/// Index of the first clause the assignment falsifies, or -1.
std::ptrdiff_t first_falsified_clause(const CnfFormula& f, const std::vector<bool>& assignment);

/// Hexagon a2 - b2 - F - b1 - a1 - T - a2.
struct VariableGadget {
  Vertex a1, a2, b1, b2, t, f;
};

/// Star with centre c[1] (c_{j,2}) and leaves c_{j,1}, c_{j,3}, c_{j,4}, c_{j,5}.
struct ClauseGadget {
  std::array<Vertex, 5> c;
};

/// Two wired copies of the variable/clause construction plus the probe w.
struct ReductionGraph {
  Graph graph;
  Vertex w = 0;
  /// Indexed [copy 0/1][variable] and [copy 0/1][clause].
  std::array<std::vector<VariableGadget>, 2> variables;
  std::array<std::vector<ClauseGadget>, 2> clauses;
};

/// Builds G' with 2(6n + 5m) + 1 vertices. Within each copy, c_{j,3} meets F_i
/// for a positive literal of x_i and T_i for a negative one, c_{j,3} meets
/// both T_i and F_i for every variable outside the clause, and c_{j,1} meets
/// both for every variable inside it. c_{j,1} and c_{j,3} of one copy meet
/// every T_i and F_i of the other copy, and w meets every c_{j,3}. Labels
/// look like "a^1_{2,1}", "T^2_3", "c^1_{1,4}", "w" with 1-based indices.
/// Throws ConstructionError(MalformedClause) when a clause repeats a variable
/// or names one outside 0..n-1.
ReductionGraph sat_reduction(const CnfFormula& f);

/// All c^k_{j,4}, plus a^k_{i,1} for true variables and b^k_{i,1} for false
/// ones (2n + 2m vertices, sorted). Resolving whenever the assignment
/// satisfies the formula. Throws std::invalid_argument on a length mismatch.
VertexSet satisfiable_side_certificate(const ReductionGraph& rg, const std::vector<bool>& assignment);

/// w, every a^k_{i,1} and every c^k_{j,4} (2n + 2m + 1 vertices, sorted).
VertexSet universal_certificate(const ReductionGraph& rg);

}  // namespace mbasis
