#pragma once

#include <string>

#include "mbasis/graph.hpp"
#include "mbasis/resolver.hpp"
#include "mbasis/theorems.hpp"

namespace mbasis {

/// Version tag carried by every JSON report.
inline constexpr const char* kReportVersion = "v1";

/// {"version","n","dim","num_bases","bases","basis_forced","void","flexible"},
/// plus "labels" when the graph has labels. Vertex sets are id lists.
std::string analysis_json(const Graph& g, const ResolvingAnalysis& a);
std::string analysis_text(const Graph& g, const ResolvingAnalysis& a);

/// {"version","ok","dim","basis_forced_count","entries":[{"id","applicable","passed","witness","detail"}]}.
std::string theorem_json(const TheoremReport& r);
std::string theorem_text(const TheoremReport& r);

}  // namespace mbasis
