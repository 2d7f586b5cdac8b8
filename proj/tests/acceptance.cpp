// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mbasis/canonical.hpp"
#include "mbasis/constructions.hpp"
#include "mbasis/corpus.hpp"
#include "mbasis/graph.hpp"
#include "mbasis/resolver.hpp"
#include "mbasis/sat_reduction.hpp"
#include "mbasis/theorems.hpp"
#include "oracles.hpp"
#include "sat_audit.hpp"

using namespace mbasis;
using Clock = std::chrono::steady_clock;

namespace {

// Time limits, seconds.
constexpr double kFigureLimit = 1.0;  // each
constexpr double kGlueLimit = 30.0;
constexpr double kDenseLimit = 60.0;
constexpr double kExtremalLimit = 300.0;
constexpr double kCorpusLimit = 1800.0;
constexpr double kOracleLimit = 300.0;
constexpr double kSatLimit = 120.0;
constexpr double kSparseLimit = 120.0;

constexpr std::uint64_t kCorpusSeed = 42;
constexpr std::size_t kCorpusSize = 5000;
constexpr std::uint64_t kOracleSeed = 20240601;
constexpr std::size_t kOracleGraphs = 1000;
constexpr std::uint64_t kSatSeed = 7;

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

VertexSet by_label(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<Vertex> out;
  for (const char* s : names) out.push_back(g.at(s));
  return make_vertex_set(out);
}

std::size_t c2(std::size_t n) { return n * (n - 1) / 2; }

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<std::string()>& body) {
  const auto t0 = Clock::now();
  std::string note, error;
  try {
    note = body();
  } catch (const Failure& f) {
    error = f.why;
  } catch (const std::exception& e) {
    error = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (error.empty() && secs > limit) {
    std::ostringstream os;
    os << "took " << secs << " s, limit " << limit << " s";
    error = os.str();
  }
  const bool ok = error.empty();
  failures += !ok;
  std::printf("%s  %d  %-34s %8.3f s  %s\n", ok ? "PASS" : "FAIL", id, name, secs,
              ok ? note.c_str() : error.c_str());
  std::fflush(stdout);
}

std::string figures() {
  for (const char* key : {"fig4", "fig2a", "fig1b"}) {
    const auto t0 = Clock::now();
    const Graph g = named_graph(key);
    const auto a = analyze(g);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    expect(secs < kFigureLimit, std::string(key) + " exceeded the per-graph limit");
    if (std::string(key) == "fig4") {
      expect(a.dim == 2, "fig4 dim");
      expect(a.bases == std::vector<VertexSet>{by_label(g, {"v2", "v5"}), by_label(g, {"v3", "v6"}),
                                               by_label(g, {"v5", "v6"})},
             "fig4 bases");
    } else if (std::string(key) == "fig2a") {
      expect(a.dim == 3, "fig2a dim");
      expect(a.bases == std::vector<VertexSet>{by_label(g, {"u", "v1", "v2"}), by_label(g, {"u", "v1", "v3"}),
                                               by_label(g, {"u", "v2", "v3"})},
             "fig2a bases");
    } else {
      expect(a.bases.size() == 1 && a.dim == 2, "fig1b basis not unique of size 2");
      for (Vertex v : a.bases[0]) expect(g.degree(v) == 1, "fig1b basis element is not a pendant");
    }
  }
  return "fig4, fig2a, fig1b exact";
}

std::string glue_examples() {
  const Graph f4 = named_graph("fig4");
  const std::vector<GluePart> two{{f4, f4.at("v2")}, {f4, f4.at("v3")}};
  const Graph w = glue(two).graph;
  expect(analyze(w).bases == std::vector<VertexSet>{by_label(w, {"v5^1", "v6^2"})}, "two-copy glue basis");

  const Graph f2 = named_graph("fig2a");
  const std::vector<GluePart> three(3, GluePart{f2, f2.at("v1")});
  const auto w1 = analyze(glue(three).graph);
  expect(w1.dim == 6 && w1.basis_forced_count() == 3, "W1 dim/forced");

  const auto w3 = analyze(iterated_glue(f2, f2.at("v1"), f2.at("v3"), 3).graph);
  expect(w3.dim == 5 && w3.basis_forced_count() == 3, "W3 dim/forced");
  return "{v5^1,v6^2}; W1 dim 6 k 3; W3 dim 5 k 3";
}

std::string dense_family() {
  for (std::size_t k : {2, 4}) {
    for (std::size_t m : {1, 2, 3}) {
      std::string pattern;
      for (std::size_t i = 0; i < k / 2; ++i) pattern += "P5,";
      pattern += "K0:" + std::to_string(m);
      const Graph g = from_complement_pattern(parse_pattern(pattern));
      const auto a = analyze(g);
      const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      expect(a.basis_forced_count() == k, tag + ": forced count " + std::to_string(a.basis_forced_count()));
      expect(a.dim == k + m - 1, tag + ": dim " + std::to_string(a.dim));
      expect(g.size() == c2(g.order()) - 2 * k, tag + ": edge count");
    }
  }
  return "6 instances";
}

std::string extremal_scan() {
  // Every labelled graph on 6 vertices with at most 4 non-edges.
  const Graph target = complement(disjoint_union(std::vector<Graph>{path_graph(5), Graph(1)}).graph);
  const std::vector<Edge> all = complete_graph(6).edges();
  std::size_t scanned = 0, with_forced = 0;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    if (std::popcount(mask) < 11) continue;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((mask >> i) & 1) es.push_back(all[i]);
    }
    const Graph g = Graph::from_edge_list(6, es);
    expect(is_connected(g), "dense graph disconnected");
    ++scanned;
    const auto a = analyze(g);
    if (a.basis_forced_count() > 0) {
      ++with_forced;
      expect(g.size() == 11, "forced vertices above 11 edges");
      expect(isomorphic(g, target), "forced vertices in a graph other than the complement of P5 + K1");
    }
  }
  expect(scanned == 1941, "scanned " + std::to_string(scanned) + " graphs, expected 1941");
  expect(with_forced > 0, "the extremal graph was not found");
  return std::to_string(scanned) + " labelled graphs, " + std::to_string(with_forced) + " extremal copies";
}

std::string corpus_suite() {
  std::size_t graphs = 0, bases = 0;
  auto run = [&](const Graph& g) {
    const auto r = run_all(g);
    if (!r.ok()) {
      const auto* f = r.failures().front();
      throw Failure{f->id + " failed on a graph with n=" + std::to_string(g.order()) + ": " + f->witness};
    }
    ++graphs;
    bases += r.analysis.bases.size();
  };
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : all_connected_graphs(n)) run(g);
  }
  for (const Graph& g : random_connected_corpus(kCorpusSize, 8, 10, kCorpusSeed)) run(g);
  return std::to_string(graphs) + " graphs, " + std::to_string(bases) + " bases";
}

std::string oracle_equivalence() {
  std::mt19937_64 rng(kOracleSeed);
  for (std::size_t i = 0; i < kOracleGraphs; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 7);
    const double p = 0.15 + 0.7 * unit_double(rng);
    const Graph g = random_connected_graph(rng, n, p);
    const std::size_t fast = analyze(g).dim;
    const std::size_t slow = oracle::metric_dimension(g);
    expect(fast == slow, "graph " + std::to_string(i) + ": " + std::to_string(fast) + " vs " + std::to_string(slow));
  }
  return std::to_string(kOracleGraphs) + " graphs agree";
}

std::string sat_checks() {
  std::mt19937_64 rng(kSatSeed);
  // (a) structure
  for (int i = 0; i < 20; ++i) {
    const CnfFormula f = random_3cnf(rng, 3 + i % 5, 1 + i % 6);
    const std::string problem = audit_reduction(f, sat_reduction(f));
    expect(problem.empty(), "structure: " + problem);
  }
  // (b), (c)
  std::size_t satisfiable = 0;
  for (std::size_t n = 3; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (int rep = 0; rep < 3; ++rep) {
        const CnfFormula f = random_3cnf(rng, n, m);
        const ReductionGraph rg = sat_reduction(f);
        const auto dm = distance_matrix(rg.graph);
        const VertexSet u = universal_certificate(rg);
        expect(u.size() == 2 * n + 2 * m + 1 && is_resolving(dm, u), "universal certificate");
        const auto model = find_model(f);
        if (!model) continue;
        ++satisfiable;
        const VertexSet c = satisfiable_side_certificate(rg, *model);
        expect(c.size() == 2 * n + 2 * m, "certificate size");
        expect(!contains(c, rg.w), "certificate contains w");
        expect(is_resolving(dm, c), "certificate does not resolve");
      }
    }
  }
  expect(satisfiable > 0, "no satisfiable formula sampled");
  // (d)
  const CnfFormula f = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 3 0\n");
  const std::vector<bool> bad{false, true, false};
  const auto j = first_falsified_clause(f, bad);
  expect(j == 0, "falsified clause index");
  const ReductionGraph rg = sat_reduction(f);
  const auto& c = rg.clauses[0][static_cast<std::size_t>(j)].c;
  const auto pairs = unresolved_pairs(distance_matrix(rg.graph), satisfiable_side_certificate(rg, bad));
  const std::pair<Vertex, Vertex> want{std::min(c[0], c[2]), std::max(c[0], c[2])};
  expect(std::find(pairs.begin(), pairs.end(), want) != pairs.end(), "c^1_{j,1}/c^1_{j,3} reported resolved");
  return "20 audits, " + std::to_string(satisfiable) + " satisfiable certificates, unresolved " +
         rg.graph.name(c[0]) + "/" + rg.graph.name(c[2]);
}

std::string sparse_scaling() {
  const Graph f2 = named_graph("fig2a");
  expect(f2.size() == 12, "fig2a edge count");
  for (std::size_t m : {2, 3, 4}) {
    const Graph w = iterated_glue(f2, f2.at("v1"), f2.at("v3"), m).graph;
    expect(w.size() == 12 * m + m - 1, "m=" + std::to_string(m) + ": edge count " + std::to_string(w.size()));
    const auto a = analyze(w);
    expect(a.basis_forced_count() == m, "m=" + std::to_string(m) + ": forced count " +
                                            std::to_string(a.basis_forced_count()));
  }
  return "m = 2, 3, 4";
}

}  // namespace

int main() {
  criterion(1, "figure catalogue", 3 * kFigureLimit, figures);
  criterion(2, "glue construction", kGlueLimit, glue_examples);
  criterion(3, "dense complement family", kDenseLimit, dense_family);
  criterion(4, "extremal uniqueness at n=6", kExtremalLimit, extremal_scan);
  criterion(5, "corpus theorem suite", kCorpusLimit, corpus_suite);
  criterion(6, "oracle equivalence", kOracleLimit, oracle_equivalence);
  criterion(7, "SAT reduction certificates", kSatLimit, sat_checks);
  criterion(8, "sparse construction scaling", kSparseLimit, sparse_scaling);
  return failures;
}
