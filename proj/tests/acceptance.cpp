// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcg/corpus.hpp"
#include "mcg/edges.hpp"
#include "mcg/families.hpp"
#include "mcg/graph6.hpp"
#include "mcg/isomorphism.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"
#include "mcg/verify.hpp"
#include "oracles.hpp"

#ifndef MCG_TEST_DATA_DIR
#define MCG_TEST_DATA_DIR "tests/data"
#endif

namespace {

using namespace mcg;

struct Outcome {
  bool passed = true;
  std::ostringstream notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      passed = false;
      notes << "    violated: " << what << '\n';
    }
  }
};

double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

bool run_criterion(int id, const std::string& title, double budget_seconds,
                   const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto started = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = elapsed(started);
  if (seconds > budget_seconds) {
    std::ostringstream msg;
    msg << "runtime " << seconds << " s exceeds budget " << budget_seconds << " s";
    o.require(false, msg.str());
  }
  std::printf("%s criterion %d: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), seconds);
  std::fputs(o.notes.str().c_str(), stdout);
  std::fflush(stdout);
  return o.passed;
}

std::string count_line(const std::string& label, std::int64_t value) {
  return "    " + label + ": " + std::to_string(value) + "\n";
}

void wheel_table(Outcome& o) {
  for (int n : {6, 8, 10, 12}) {
    const Graph w = wheel(n);
    int spokes = 0;
    for (const EdgeClassification& c : classify_all_edges(w)) {
      const bool spoke = c.edge.u == 0;
      spokes += spoke;
      const std::string where = "W" + std::to_string(n) + " edge " + to_string(c.edge);
      if (spoke) {
        o.require(c.removable && c.b_invariant && c.solitary, where + " spoke removable, b-invariant, solitary");
      } else {
        o.require(!c.removable && !c.solitary, where + " rim edge nonremovable and nonsolitary");
      }
    }
    o.require(spokes == n - 1, "W" + std::to_string(n) + " has n-1 spokes");
  }
}

void k4_facts(Outcome& o) {
  const Graph k4 = complete(4);
  for (const EdgeClassification& c : classify_all_edges(k4)) o.require(!c.removable, "K4 edge " + to_string(c.edge) + " nonremovable");
  o.require(brick_count(k4) == 1, "b(K4) = 1");
  o.require(is_brick(k4), "K4 is a brick");
  o.require(is_wheel(k4), "K4 is a wheel");
}

void figure_trio(Outcome& o) {
  o.require(is_brick(complete(4)), "K4 is a brick");
  o.require(is_brick(c6_complement()), "complement of C6 is a brick");
  o.require(is_brick(petersen()), "Petersen is a brick");
  struct Case {
    const char* name;
    Graph g;
    std::size_t cycle_length;
  };
  for (const Case& c : {Case{"complement of C6", c6_complement(), 3}, Case{"Petersen", petersen(), 5}}) {
    const SolidityResult r = check_solidity(c.g);
    o.require(!r.solid, std::string(c.name) + " is nonsolid");
    if (!r.witness) continue;
    o.require(validate_witness(c.g, *r.witness), std::string(c.name) + " witness validates");
    o.require(r.witness->cycle1.size() == c.cycle_length && r.witness->cycle2.size() == c.cycle_length,
              std::string(c.name) + " witness cycles have length " + std::to_string(c.cycle_length));
    o.notes << "    " << c.name << " witness: (";
    for (Vertex v : r.witness->cycle1) o.notes << ' ' << v;
    o.notes << " ) (";
    for (Vertex v : r.witness->cycle2) o.notes << ' ' << v;
    o.notes << " )\n";
  }
}

// Rows of a main-theorem report whose graph has the all-solitary property.
std::vector<Graph> all_solitary_graphs(const VerificationReport& r) {
  std::vector<Graph> out;
  for (const GraphRow& row : r.rows)
    if (tally(row.values, "all_b_invariant_solitary") == 1) out.push_back(parse_graph6(row.graph6));
  return out;
}

void flagship(Outcome& o) {
  const VerificationReport r = verify_main_theorem({BuiltinOrigin{1, 8}, {Filter::kBrick}});
  o.require(r.passed, "main-theorem verdict PASS");
  const std::vector<Graph> special = all_solitary_graphs(r);
  o.require(special.size() == 2, "exactly two solid bricks other than K4 with all b-invariant edges solitary");
  bool w6 = false;
  bool w8 = false;
  for (const Graph& g : special) {
    w6 = w6 || are_isomorphic(g, wheel(6));
    w8 = w8 || are_isomorphic(g, wheel(8));
  }
  o.require(w6 && w8, "they are W6 and W8");
  o.notes << count_line("graphs enumerated", static_cast<std::int64_t>(r.stages.front().count))
          << count_line("bricks", tally(r.tallies, "bricks"))
          << count_line("solid bricks other than K4", tally(r.tallies, "solid_bricks_checked"))
          << count_line("wheels", tally(r.tallies, "wheels"));
}

std::string order10_corpus() {
  if (const char* env = std::getenv("MCG_ORDER10_CORPUS")) return env;
  return std::string(MCG_TEST_DATA_DIR) + "/order10-3connected.g6.gz";
}

void order10(Outcome& o) {
  const std::string path = order10_corpus();
  if (!std::filesystem::exists(path)) {
    o.require(false, "corpus " + path + " is missing (see tools/make_order10_corpus.sh)");
    return;
  }
  const auto started = std::chrono::steady_clock::now();
  const VerificationReport r = verify_main_theorem({FileOrigin{path}, {Filter::kBrick}});
  const double seconds = elapsed(started);
  const double input = static_cast<double>(r.stages.front().count);
  o.require(r.passed, "main-theorem verdict PASS");
  o.require(input > 0, "corpus is nonempty");
  for (const GraphRow& row : r.rows) o.require(parse_graph6(row.graph6).order() == 10, "corpus graphs have order 10");
  const std::vector<Graph> special = all_solitary_graphs(r);
  o.require(special.size() == 1 && are_isomorphic(special.front(), wheel(10)),
            "W10 is the unique solid brick with all b-invariant edges solitary");
  const double throughput = input / seconds;
  o.require(throughput >= 100.0, "brick-filtered pipeline throughput >= 100 graphs/s");
  o.notes << count_line("graphs ingested", static_cast<std::int64_t>(input))
          << count_line("bricks", static_cast<std::int64_t>(r.stages.back().count))
          << count_line("solid bricks", tally(r.tallies, "solid_bricks_checked"))
          << "    throughput: " << static_cast<std::int64_t>(throughput) << " graphs/s\n";
}

void lemma_suite(Outcome& o) {
  const CorpusSource bricks{BuiltinOrigin{1, 8}, {Filter::kBrick}};
  for (Claim c : {Claim::kLemmaSolidRemovableB, Claim::kLemmaTwoNonremovable, Claim::kLemmaTwoNonsolitary}) {
    const VerificationReport r = verify_claim(c, bricks);
    o.require(r.passed, std::string(claim_id(c)) + " PASS");
    o.require(!r.rows.empty(), std::string(claim_id(c)) + " checked at least one graph");
    o.notes << "    " << claim_id(c) << ": " << r.rows.size() << " graphs in universe\n";
  }
  FamilyOrigin wheels;
  for (int n = 4; n <= 12; n += 2) wheels.members.push_back({Family::kWheel, n});
  const VerificationReport w = verify_claim(Claim::kLemmaWheelSolitary, {wheels, {}});
  o.require(w.passed, "lemma-wheel-solitary PASS");
  o.require(tally(w.tallies, "wheels_checked") == 5, "wheels of order 4..12 checked");
}

void cited_suite(Outcome& o) {
  const VerificationReport clm = verify_claim(Claim::kClm2002Existence, {BuiltinOrigin{1, 8}, {Filter::kBrick}});
  o.require(clm.passed, "clm2002-existence PASS");
  o.require(tally(clm.tallies, "excluded") == 2, "exactly K4 and the complement of C6 excluded at order <= 8");
  o.notes << count_line("bricks with a b-invariant edge", tally(clm.tallies, "bricks_checked"));
  const VerificationReport lfw = verify_claim(
      Claim::kLfw2020Extremal,
      {FamilyOrigin{{{Family::kMoebiusLadder, 8}, {Family::kMoebiusLadder, 12}, {Family::kPrism, 10}}}, {}});
  o.require(lfw.passed, "lfw2020-extremal PASS");
  const std::vector<std::int64_t> golden{4, 6, 5};
  o.require(lfw.rows.size() == golden.size(), "three ladders checked");
  for (std::size_t i = 0; i < lfw.rows.size() && i < golden.size(); ++i) {
    const std::int64_t got = tally(lfw.rows[i].values, "b_invariant");
    o.require(got == golden[i], lfw.rows[i].detail + " matches golden " + std::to_string(golden[i]));
    o.notes << "    " << lfw.rows[i].detail << '\n';
  }
}

void lovasz(Outcome& o) {
  VerifyOptions options;
  options.decomposition_runs = 5;
  const VerificationReport r = verify_claim(Claim::kLovaszUniqueness, {RandomOrigin{150, 10, 2024}, {}}, options);
  o.require(r.passed, "lovasz-uniqueness PASS");
  o.require(tally(r.tallies, "matching_covered") >= 100, "at least 100 matching covered graphs");
  o.require(tally(r.tallies, "violations") == 0, "zero mismatches");
  o.notes << count_line("graphs", tally(r.tallies, "matching_covered"))
          << count_line("with a nontrivial tight cut", tally(r.tallies, "with_nontrivial_tight_cut"))
          << count_line("randomised decompositions", tally(r.tallies, "decompositions"));
}

void oracle_equivalence(Outcome& o) {
  std::mt19937_64 rng(99);
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 10, 0.1 + 0.08 * (i % 10));
    const Matching m = max_matching(g);
    if (!m.is_matching_of(g) || static_cast<int>(m.size()) != oracle::max_matching_size(g)) ++mismatches;
  }
  o.require(mismatches == 0, "max_matching equals the exhaustive optimum on 500 graphs");
  int pm_mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 2 * (1 + i % 5), 0.25 + 0.1 * (i % 6));
    if (enumerate_perfect_matchings(g).size() != oracle::pm_count(g)) ++pm_mismatches;
  }
  o.require(pm_mismatches == 0, "perfect matching enumeration equals the all-subsets oracle on 200 graphs");
}

// A perfect matching of g minus `removed`, in g's labels.
Matching pm_without(const Graph& g, VertexSet removed) {
  const Relabeled r = delete_vertices(g, removed);
  std::vector<Vertex> back(r.graph.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (r.old_to_new[v] >= 0) back[r.old_to_new[v]] = v;
  std::vector<Edge> edges;
  const Matching m = max_matching(r.graph);
  for (const Edge& e : m.edges()) edges.emplace_back(back[e.u], back[e.v]);
  return Matching(std::move(edges));
}

void invariant_suite(Outcome& o) {
  std::int64_t graphs = 0;
  std::int64_t pm_pairs = 0;
  std::int64_t vertex_pair_checks = 0;
  std::int64_t tight_shores = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      ++graphs;
      const std::string code = to_graph6(g);
      const std::vector<Matching> pms = enumerate_perfect_matchings(g);
      const std::uint64_t p = pms.size();

      std::uint64_t sum = 0;
      for (const Edge& e : g.edges()) sum += count_pm_containing(g, e);
      o.require(sum == p * static_cast<std::uint64_t>(n) / 2, code + ": containment sum identity");

      for (const Matching& m : pms)
        o.require(exists_alternating_cycle(g, m) == (p > 1), code + ": unique PM iff no alternating cycle");

      for (std::size_t j = 1; j < pms.size(); ++j) {
        ++pm_pairs;
        for (const AlternatingComponent& c : symmetric_difference_components(g, pms[0], pms[j]))
          o.require(c.kind == AlternatingKind::kCycle && c.length() % 2 == 0,
                    code + ": two perfect matchings differ by even alternating cycles");
      }

      for (Vertex u = 0; u < n; ++u) {
        std::vector<Vertex> ends;
        for (Vertex a = 0; a < n; ++a)
          if (a != u && has_perfect_matching(delete_vertices(g, singleton(u) | singleton(a)).graph)) ends.push_back(a);
        for (std::size_t i = 0; i < ends.size(); ++i)
          for (std::size_t j = i + 1; j < ends.size(); ++j) {
            ++vertex_pair_checks;
            const Vertex a = ends[i];
            const Vertex b = ends[j];
            const Matching m1 = pm_without(g, singleton(u) | singleton(a));
            const Matching m2 = pm_without(g, singleton(u) | singleton(b));
            int paths = 0;
            for (const AlternatingComponent& c : symmetric_difference_components(g, m1, m2)) {
              if (c.kind == AlternatingKind::kCycle) {
                o.require(c.length() % 2 == 0, code + ": cycles in the difference are even");
                continue;
              }
              ++paths;
              const Vertex lo = std::min(c.vertices.front(), c.vertices.back());
              const Vertex hi = std::max(c.vertices.front(), c.vertices.back());
              o.require(lo == std::min(a, b) && hi == std::max(a, b) && c.length() % 2 == 0,
                        code + ": the difference path is even with ends a and b");
            }
            o.require(paths == 1, code + ": exactly one path component");
          }
      }

      if (p > 0) {
        const PerfectMatchingList list(g);
        for (VertexSet x = 1; x < g.vertices(); ++x) {
          if (!list.crosses_once(x)) continue;
          ++tight_shores;
          o.require(cardinality(x) % 2 == 1, code + ": tight shores are odd");
        }
      }
    }
  }
  for (int n = 4; n <= 8; n += 2) {
    const Graph w = wheel(n);
    for (Vertex a = 1; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        const auto comps = symmetric_difference_components(w, pm_without(w, singleton(0) | singleton(a)),
                                                           pm_without(w, singleton(0) | singleton(b)));
        o.require(comps.size() == 1 && comps[0].kind == AlternatingKind::kPath && comps[0].length() % 2 == 0 &&
                      comps[0].length() >= 2,
                  "W" + std::to_string(n) + ": spoke remainders differ by one even path");
      }
  }
  o.notes << count_line("graphs", graphs) << count_line("perfect matching pairs", pm_pairs)
          << count_line("vertex-deleted pairs", vertex_pair_checks) << count_line("tight shores", tight_shores);
}

}  // namespace

int main() {
  std::vector<bool> results;
  results.push_back(run_criterion(1, "wheel classification table", 5, wheel_table));
  results.push_back(run_criterion(2, "K4 facts", 1, k4_facts));
  results.push_back(run_criterion(3, "K4, complement of C6, Petersen", 5, figure_trio));
  results.push_back(run_criterion(4, "main theorem over all bricks of order <= 8", 1800, flagship));
  results.push_back(run_criterion(5, "main theorem over the order-10 3-connected corpus", 3600, order10));
  results.push_back(run_criterion(6, "lemma suite", 600, lemma_suite));
  results.push_back(run_criterion(7, "cited results", 600, cited_suite));
  results.push_back(run_criterion(8, "decomposition uniqueness", 600, lovasz));
  results.push_back(run_criterion(9, "oracle equivalence", 120, oracle_equivalence));
  results.push_back(run_criterion(10, "invariant suite over order <= 8", 1800, invariant_suite));
  int failed = 0;
  for (bool r : results) failed += !r;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
