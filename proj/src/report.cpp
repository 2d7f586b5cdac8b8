#include "mbasis/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mbasis {

namespace {

using json = nlohmann::json;

std::string names(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + g.name(s[i]);
  return out + "}";
}

}  // namespace

std::string analysis_json(const Graph& g, const ResolvingAnalysis& a) {
  json j;
  j["version"] = kReportVersion;
  j["n"] = g.order();
  j["dim"] = a.dim;
  j["num_bases"] = a.bases.size();
  j["bases"] = a.bases;
  j["basis_forced"] = a.classification.basis_forced;
  j["void"] = a.classification.void_vertices;
  j["flexible"] = a.classification.flexible;
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump() + "\n";
}

std::string analysis_text(const Graph& g, const ResolvingAnalysis& a) {
  std::ostringstream os;
  os << "vertices:      " << g.order() << "\n"
     << "edges:         " << g.size() << "\n"
     << "dimension:     " << a.dim << "\n"
     << "metric bases:  " << a.bases.size() << "\n";
  for (const auto& b : a.bases) os << "  " << names(g, b) << "\n";
  os << "basis forced:  " << names(g, a.classification.basis_forced) << "\n"
     << "void:          " << names(g, a.classification.void_vertices) << "\n"
     << "flexible:      " << names(g, a.classification.flexible) << "\n";
  return os.str();
}

std::string theorem_json(const TheoremReport& r) {
  json j;
  j["version"] = kReportVersion;
  j["ok"] = r.ok();
  j["dim"] = r.analysis.dim;
  j["basis_forced_count"] = r.analysis.basis_forced_count();
  j["entries"] = json::array();
  for (const auto& e : r.entries) {
    j["entries"].push_back(
        {{"id", e.id}, {"applicable", e.applicable}, {"passed", e.passed}, {"witness", e.witness}, {"detail", e.detail}});
  }
  return j.dump() + "\n";
}

std::string theorem_text(const TheoremReport& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    const char* status = !e.applicable ? "vacuous" : e.passed ? "pass" : "FAIL";
    os << status << "  " << e.id;
    if (e.failed()) os << "  witness " << e.witness << ": " << e.detail;
    os << "\n";
  }
  os << (r.ok() ? "all checks passed" : "FAILURES present") << "\n";
  return os.str();
}

}  // namespace mbasis
