// mbasis: metric dimension, metric bases and basis-forced/void classification.
//
// Exit codes: 0 ok, 1 a checked statement failed, 2 bad input or builder
// error, 3 search budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "mbasis/colour_graph.hpp"
#include "mbasis/constructions.hpp"
#include "mbasis/corpus.hpp"
#include "mbasis/errors.hpp"
#include "mbasis/graph_io.hpp"
#include "mbasis/report.hpp"
#include "mbasis/resolver.hpp"
#include "mbasis/sat_reduction.hpp"
#include "mbasis/theorems.hpp"

namespace {

using namespace mbasis;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudgetExceeded = 3;

/// Input error raised by the CLI itself (bad flag combination, bad index).
struct UsageError : Error {
  using Error::Error;
};

struct Common {
  std::string named;
  std::string input;
  std::string positional;
  std::string format;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  double budget_secs = 60.0;
  unsigned threads = 1;
  std::uint64_t seed = 42;

  SearchBudget budget() const {
    if (budget_nodes == 0 || !(budget_secs > 0)) throw UsageError("budgets must be positive");
    SearchBudget b;
    b.max_nodes = budget_nodes;
    b.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(budget_secs * 1000.0));
    b.threads = std::max(1u, threads);
    return b;
  }
};

void add_input_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--named", c.named, "Catalogue graph (" + [] {
    std::string keys;
    for (const auto& k : named_graph_keys()) keys += (keys.empty() ? "" : ", ") + k;
    return keys;
  }() + ")");
  cmd->add_option("--input", c.input, "Graph file (edge list or JSON)");
  cmd->add_option("file", c.positional, "Graph file (same as --input)");
}

void add_search_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget-nodes", c.budget_nodes, "Search node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--budget-secs", c.budget_secs, "Search time budget in seconds")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

Graph load_graph(const Common& c) {
  const int sources = !c.named.empty() + !c.input.empty() + !c.positional.empty();
  if (sources != 1) throw UsageError("give exactly one of --named, --input or a file argument");
  if (!c.named.empty()) return named_graph(c.named);
  return read_graph_file(c.input.empty() ? c.positional : c.input);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw UsageError("format '" + format + "' not supported here (use " + list + ")");
}

std::string emit_graph(const Graph& g, const std::string& format) {
  require_format(format, {"json", "dot", "edgelist", "text"});
  if (format == "json") return to_graph_json(g);
  if (format == "dot") return to_dot(g);
  if (format == "edgelist") return to_edge_list(g);
  std::ostringstream os;
  os << "vertices: " << g.order() << "\nedges:    " << g.size() << "\n";
  for (const Edge& e : g.edges()) os << "  " << g.name(e.u) << " -- " << g.name(e.v) << "\n";
  return os.str();
}

Vertex resolve_vertex(const Graph& g, const json& ref) {
  if (ref.is_number_unsigned()) {
    const auto v = ref.get<Vertex>();
    if (v >= g.order()) throw UsageError("vertex " + std::to_string(v) + " out of range");
    return v;
  }
  if (ref.is_string()) return g.at(ref.get<std::string>());
  throw UsageError("vertex reference must be an id or a label");
}

Vertex resolve_token(const Graph& g, std::string_view token) {
  if (auto v = g.find(token)) return *v;
  Vertex id = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec == std::errc{} && ptr == token.data() + token.size() && id < g.order()) return id;
  throw UsageError("unknown vertex '" + std::string(token) + "'");
}

Graph graph_from_spec(const json& spec, const std::string& base_dir) {
  if (spec.contains("named")) return named_graph(spec.at("named").get<std::string>());
  if (spec.contains("graph")) return parse_graph_json(spec.at("graph").dump());
  if (spec.contains("input")) {
    std::string path = spec.at("input").get<std::string>();
    if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
    return read_graph_file(path);
  }
  throw UsageError("glue part needs \"named\", \"graph\" or \"input\"");
}

/// {"parts":[{"named":"fig4","anchor":"v3"}, ...]} joins all anchors in one
/// clique; {"iterated":{"named":"fig2a","first_anchor":"v1",
/// "carry_anchor":"v3","copies":3}} chains copies.
Graph build_glue(const std::string& path, const SearchBudget& budget) {
  json spec;
  try {
    spec = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("glue spec: ") + e.what());
  }
  const auto slash = path.find_last_of('/');
  const std::string dir = slash == std::string::npos ? "" : path.substr(0, slash);
  try {
    if (spec.contains("iterated")) {
      const json& it = spec.at("iterated");
      const Graph part = graph_from_spec(it, dir);
      return iterated_glue(part, resolve_vertex(part, it.at("first_anchor")),
                           resolve_vertex(part, it.at("carry_anchor")), it.at("copies").get<std::size_t>(), budget)
          .graph;
    }
    std::vector<GluePart> parts;
    for (const json& p : spec.at("parts")) {
      Graph g = graph_from_spec(p, dir);
      const Vertex anchor = resolve_vertex(g, p.at("anchor"));
      parts.push_back({std::move(g), anchor});
    }
    return glue(parts, budget).graph;
  } catch (const json::exception& e) {
    throw ParseError(std::string("glue spec: ") + e.what());
  }
}

int cmd_analyze(const Common& c) {
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"json", "text"});
  const Graph g = load_graph(c);
  const ResolvingAnalysis a = analyze(g, c.budget());
  std::cout << (format == "json" ? analysis_json(g, a) : analysis_text(g, a));
  return kOk;
}

int cmd_construct(const Common& c, const std::string& kind, const std::string& arg) {
  const std::string format = c.format.empty() ? "json" : c.format;
  require_format(format, {"json", "dot", "edgelist", "text"});
  Graph g;
  if (kind == "glue") {
    g = build_glue(arg, c.budget());
  } else if (kind == "pattern") {
    g = from_complement_pattern(parse_pattern(arg));
  } else if (kind == "sat") {
    g = sat_reduction(parse_dimacs(read_file(arg))).graph;
  } else if (kind == "named") {
    g = named_graph(arg);
  } else {
    throw UsageError("unknown construction '" + kind + "' (use glue, pattern, sat or named)");
  }
  std::cout << emit_graph(g, format);
  return kOk;
}

/// Parses "n=<k>".
std::size_t corpus_order(const std::string& spec) {
  std::size_t k = 0;
  if (spec.rfind("n=", 0) == 0) {
    const auto [ptr, ec] = std::from_chars(spec.data() + 2, spec.data() + spec.size(), k);
    if (ec == std::errc{} && ptr == spec.data() + spec.size() && k >= 2 && k <= kMaxSearchOrder) return k;
  }
  throw UsageError("--corpus expects n=<k> with 2 <= k <= " + std::to_string(kMaxSearchOrder));
}

int verify_corpus(const Common& c, const std::string& spec, std::size_t random_count) {
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"json", "text"});
  const std::size_t k = corpus_order(spec);
  std::vector<Graph> corpus;
  if (k <= 7) {
    for (std::size_t n = 2; n <= k; ++n) {
      for (Graph& g : all_connected_graphs(n)) corpus.push_back(std::move(g));
    }
  } else {
    corpus = random_connected_corpus(random_count, 8, k, c.seed);
  }

  SearchBudget budget = c.budget();
  const unsigned workers = budget.threads;
  budget.threads = 1;
  std::vector<std::optional<TheoremReport>> reports(corpus.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> exceeded{false};
  std::mutex err_mutex;
  std::string budget_message;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size() && !exceeded;) {
      try {
        reports[i] = run_all(corpus[i], budget);
      } catch (const SearchBudgetExceeded& e) {
        std::lock_guard lock(err_mutex);
        exceeded = true;
        budget_message = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (exceeded) {
    std::cerr << "error: " << budget_message << "\n";
    return kBudgetExceeded;
  }

  std::size_t failures = 0;
  json failed = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const TheoremEntry* e : reports[i]->failures()) {
      ++failures;
      failed.push_back({{"graph", json::parse(to_graph_json(corpus[i]))},
                        {"id", e->id},
                        {"witness", e->witness},
                        {"detail", e->detail}});
      text << "FAIL " << e->id << " on graph #" << i << " (" << to_edge_list(corpus[i]).substr(0, 80)
           << "...): " << e->witness << ": " << e->detail << "\n";
    }
  }
  if (format == "json") {
    json j{{"version", kReportVersion}, {"graphs", corpus.size()}, {"ok", failures == 0}, {"failures", failed}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text.str() << "graphs checked: " << corpus.size() << "\nfailures: " << failures << "\n";
  }
  return failures == 0 ? kOk : kCheckFailed;
}

int cmd_verify(const Common& c, const std::string& corpus, std::size_t random_count) {
  if (!corpus.empty()) {
    if (!c.named.empty() || !c.input.empty() || !c.positional.empty()) {
      throw UsageError("--corpus cannot be combined with a graph input");
    }
    return verify_corpus(c, corpus, random_count);
  }
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"json", "text"});
  const Graph g = load_graph(c);
  const TheoremReport r = run_all(g, c.budget());
  std::cout << (format == "json" ? theorem_json(r) : theorem_text(r));
  return r.ok() ? kOk : kCheckFailed;
}

int cmd_colour_graph(const Common& c, std::size_t basis_index, const std::string& set) {
  const std::string format = c.format.empty() ? "dot" : c.format;
  require_format(format, {"dot", "json", "text"});
  const Graph g = load_graph(c);
  VertexSet r;
  if (!set.empty()) {
    std::vector<Vertex> picked;
    std::stringstream ss(set);
    for (std::string tok; std::getline(ss, tok, ',');) picked.push_back(resolve_token(g, tok));
    r = make_vertex_set(std::move(picked));
  } else {
    const ResolvingAnalysis a = analyze(g, c.budget());
    if (basis_index >= a.bases.size()) {
      throw UsageError("basis index " + std::to_string(basis_index) + " out of range (" +
                       std::to_string(a.bases.size()) + " bases)");
    }
    r = a.bases[basis_index];
  }
  const ColourGraph cg = build_colour_graph(distance_matrix(g), r);
  if (format == "dot") {
    std::cout << colour_graph_to_dot(cg, g);
  } else if (format == "json") {
    json j{{"version", kReportVersion}, {"reference", cg.reference()}, {"edges", json::array()}};
    for (const auto& e : cg.edges()) j["edges"].push_back({{"x", e.x}, {"y", e.y}, {"colour", e.colour}});
    std::cout << j.dump() << "\n";
  } else {
    for (Vertex col : cg.reference()) {
      std::cout << "colour " << g.name(col) << ":";
      for (const auto& e : cg.edges_of(col)) std::cout << " " << g.name(e.x) << "-" << g.name(e.y);
      std::cout << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact metric dimension, metric bases and basis-forced/void vertex classification"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format: json, dot, edgelist or text");
  app.add_option("--seed", common.seed, "Seed for random corpora");

  auto* analyze_cmd = app.add_subcommand("analyze", "Metric dimension, all metric bases, vertex classes");
  add_input_options(analyze_cmd, common);
  add_search_options(analyze_cmd, common);

  std::string kind, arg;
  auto* construct_cmd = app.add_subcommand("construct", "Build a graph: glue <spec.json> | pattern <pieces> | sat <f.cnf> | named <key>");
  construct_cmd->add_option("kind", kind, "glue, pattern, sat or named")->required();
  construct_cmd->add_option("argument", arg, "Spec file, pattern string, DIMACS file or catalogue key")->required();
  add_search_options(construct_cmd, common);

  std::string corpus;
  std::size_t corpus_size = 5000;
  auto* verify_cmd = app.add_subcommand("verify", "Check every structural statement on a graph or a corpus");
  add_input_options(verify_cmd, common);
  add_search_options(verify_cmd, common);
  verify_cmd->add_option("--corpus", corpus, "n=<k>: all connected graphs on 2..k vertices (k <= 7) or a seeded random corpus on 8..k vertices");
  verify_cmd->add_option("--corpus-size", corpus_size, "Random corpus size for k >= 8")->check(CLI::PositiveNumber);

  std::size_t basis_index = 0;
  std::string set;
  auto* colour_cmd = app.add_subcommand("colour-graph", "Colour graph of a metric basis (or of --set)");
  add_input_options(colour_cmd, common);
  add_search_options(colour_cmd, common);
  colour_cmd->add_option("--basis", basis_index, "Index into the sorted list of metric bases");
  colour_cmd->add_option("--set", set, "Comma-separated vertex labels or ids to use instead of a basis");

  for (auto* cmd : {analyze_cmd, construct_cmd, verify_cmd, colour_cmd}) {
    cmd->add_option("--format", common.format, "Output format");
    cmd->add_option("--seed", common.seed, "Seed for random corpora");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(common);
    if (construct_cmd->parsed()) return cmd_construct(common, kind, arg);
    if (verify_cmd->parsed()) return cmd_verify(common, corpus, corpus_size);
    if (colour_cmd->parsed()) return cmd_colour_graph(common, basis_index, set);
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
