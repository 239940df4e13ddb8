#include "mcg/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <thread>

#include "mcg/edges.hpp"
#include "mcg/families.hpp"
#include "mcg/graph6.hpp"
#include "mcg/isomorphism.hpp"
#include "mcg/structure.hpp"

namespace mcg {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 8> kClaimIds{{
    {Claim::kMainTheorem, "main-theorem"},
    {Claim::kLemmaSolidRemovableB, "lemma-solid-removable-b"},
    {Claim::kLemmaTwoNonremovable, "lemma-two-nonremovable"},
    {Claim::kLemmaTwoNonsolitary, "lemma-two-nonsolitary"},
    {Claim::kLemmaWheelSolitary, "lemma-wheel-solitary"},
    {Claim::kClm2002Existence, "clm2002-existence"},
    {Claim::kLfw2020Extremal, "lfw2020-extremal"},
    {Claim::kLovaszUniqueness, "lovasz-uniqueness"},
}};

// Tally names per claim, in report order.
std::vector<std::string> tally_names(Claim c) {
  switch (c) {
    case Claim::kMainTheorem:
      return {"graphs", "bricks", "k4", "nonsolid_bricks", "solid_bricks_checked", "wheels",
              "all_b_invariant_solitary", "vacuous", "violations"};
    case Claim::kLemmaSolidRemovableB:
      return {"graphs", "bricks", "solid_bricks", "removable_edges", "violations"};
    case Claim::kLemmaTwoNonremovable:
      return {"graphs", "bricks", "solid_bricks", "bricks_checked", "violations"};
    case Claim::kLemmaTwoNonsolitary:
      return {"graphs", "bricks", "solid_bricks", "hypothesis_failed", "bricks_checked",
              "violations"};
    case Claim::kLemmaWheelSolitary:
      return {"graphs", "wheels_checked", "b_invariant_edges", "violations"};
    case Claim::kClm2002Existence:
      return {"graphs", "bricks", "excluded", "bricks_checked", "violations"};
    case Claim::kLfw2020Extremal:
      return {"graphs", "prisms_checked", "moebius_ladders_checked", "violations"};
    case Claim::kLovaszUniqueness:
      return {"graphs", "matching_covered", "with_nontrivial_tight_cut", "decompositions",
              "violations"};
  }
  return {};
}

void bump(Tallies& t, std::string_view name, std::int64_t by = 1) {
  for (auto& [key, value] : t)
    if (key == name) {
      value += by;
      return;
    }
  t.emplace_back(std::string(name), by);
}

std::string flag(bool b) { return b ? "1" : "0"; }

struct BrickEdgeSummary {
  std::vector<EdgeClassification> edges;
  int b_invariant = 0;
  int b_invariant_solitary = 0;
  std::optional<Edge> nonsolitary_b_invariant;
};

BrickEdgeSummary summarise(const Graph& g) {
  BrickEdgeSummary s;
  s.edges = classify_all_edges(g);
  for (const EdgeClassification& c : s.edges) {
    if (!c.b_invariant) continue;
    ++s.b_invariant;
    if (c.solitary)
      ++s.b_invariant_solitary;
    else if (!s.nonsolitary_b_invariant)
      s.nonsolitary_b_invariant = c.edge;
  }
  return s;
}

// Brick and solidity gate shared by the solid-brick claims.
bool solid_brick_gate(const Graph& g, const VerifyOptions& options, ClaimCheck& out) {
  if (!is_brick(g)) return false;
  bump(out.counts, "bricks");
  if (!is_solid(g)) return !options.require_solid;
  bump(out.counts, "solid_bricks");
  return true;
}

ClaimCheck check_main_theorem(const Graph& g, const VerifyOptions& options) {
  ClaimCheck out;
  if (!is_brick(g)) return out;
  bump(out.counts, "bricks");
  if (g.order() == 4) {
    bump(out.counts, "k4");
    return out;
  }
  if (!is_solid(g)) {
    bump(out.counts, "nonsolid_bricks");
    if (options.require_solid) return out;
  } else {
    bump(out.counts, "solid_bricks_checked");
  }
  out.in_universe = true;
  const BrickEdgeSummary s = summarise(g);
  const bool all_solitary = s.b_invariant == s.b_invariant_solitary;
  const bool wheel = is_wheel(g);
  if (wheel) bump(out.counts, "wheels");
  if (all_solitary) bump(out.counts, "all_b_invariant_solitary");
  if (s.b_invariant == 0) bump(out.counts, "vacuous");
  out.holds = all_solitary == wheel;
  out.values = {{"order", g.order()},
                {"edges", g.size()},
                {"b_invariant", s.b_invariant},
                {"b_invariant_solitary", s.b_invariant_solitary},
                {"all_b_invariant_solitary", all_solitary ? 1 : 0},
                {"wheel", wheel ? 1 : 0}};
  out.detail = "wheel=" + flag(wheel) + " all_b_invariant_solitary=" + flag(all_solitary) +
               " b_invariant=" + std::to_string(s.b_invariant) +
               " b_invariant_solitary=" + std::to_string(s.b_invariant_solitary);
  if (!out.holds) {
    out.detail += wheel ? "; wheel with nonsolitary b-invariant edge " +
                              to_string(*s.nonsolitary_b_invariant)
                        : "; non-wheel brick whose b-invariant edges are all solitary";
  }
  return out;
}

ClaimCheck check_solid_removable_b(const Graph& g, const VerifyOptions& options) {
  ClaimCheck out;
  if (!solid_brick_gate(g, options, out)) return out;
  out.in_universe = true;
  int removable = 0;
  int b_invariant = 0;
  for (const EdgeClassification& c : classify_all_edges(g)) {
    if (!c.removable) continue;
    ++removable;
    if (c.b_invariant) {
      ++b_invariant;
    } else if (out.holds) {
      out.holds = false;
      out.detail = "removable edge " + to_string(c.edge) + " is not b-invariant";
    }
  }
  bump(out.counts, "removable_edges", removable);
  out.values = {{"removable", removable}, {"b_invariant", b_invariant}};
  if (out.holds)
    out.detail = "removable=" + std::to_string(removable) +
                 " b_invariant=" + std::to_string(b_invariant);
  return out;
}

// Shared by the two per-vertex lemmas.
ClaimCheck check_vertex_bound(const Graph& g, const VerifyOptions& options, bool nonsolitary) {
  ClaimCheck out;
  if (!solid_brick_gate(g, options, out)) return out;
  if (g.order() < 6) return out;
  const std::vector<EdgeClassification> edges = classify_all_edges(g);
  if (nonsolitary) {
    bool hypothesis = std::all_of(edges.begin(), edges.end(), [](const EdgeClassification& c) {
      return !c.b_invariant || c.solitary;
    });
    if (!hypothesis) {
      bump(out.counts, "hypothesis_failed");
      return out;
    }
  }
  out.in_universe = true;
  bump(out.counts, "bricks_checked");
  const std::vector<VertexTally> tallies = vertex_tallies(g, edges);
  int worst = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    int count = nonsolitary ? tallies[v].nonsolitary_incident : tallies[v].nonremovable_incident;
    worst = std::max(worst, count);
    if (count > 2 && out.holds) {
      out.holds = false;
      out.detail = "vertex " + std::to_string(v) + " has " + std::to_string(count) +
                   (nonsolitary ? " nonsolitary" : " nonremovable") + " incident edges";
    }
  }
  out.values = {{"max_incident", worst}};
  if (out.holds) out.detail = "max_incident=" + std::to_string(worst);
  return out;
}

ClaimCheck check_wheel_solitary(const Graph& g) {
  ClaimCheck out;
  if (!is_wheel(g) || g.order() % 2 != 0) return out;
  out.in_universe = true;
  bump(out.counts, "wheels_checked");
  const BrickEdgeSummary s = summarise(g);
  bump(out.counts, "b_invariant_edges", s.b_invariant);
  out.holds = !s.nonsolitary_b_invariant.has_value();
  out.values = {{"order", g.order()},
                {"b_invariant", s.b_invariant},
                {"b_invariant_solitary", s.b_invariant_solitary}};
  out.detail = out.holds ? "b_invariant=" + std::to_string(s.b_invariant) + " all solitary"
                         : "b-invariant edge " + to_string(*s.nonsolitary_b_invariant) +
                               " is not solitary";
  return out;
}

bool is_named_exception(const Graph& g) {
  static const std::array<Graph, 3> exceptions{complete(4), c6_complement(), petersen()};
  return std::any_of(exceptions.begin(), exceptions.end(),
                     [&](const Graph& h) { return are_isomorphic(g, h); });
}

ClaimCheck check_clm2002(const Graph& g) {
  ClaimCheck out;
  if (!is_brick(g)) return out;
  bump(out.counts, "bricks");
  if (is_named_exception(g)) {
    bump(out.counts, "excluded");
    return out;
  }
  out.in_universe = true;
  bump(out.counts, "bricks_checked");
  const BrickEdgeSummary s = summarise(g);
  out.holds = s.b_invariant >= 1;
  out.values = {{"order", g.order()}, {"b_invariant", s.b_invariant}};
  out.detail = "b_invariant=" + std::to_string(s.b_invariant);
  if (!out.holds) out.detail += "; brick without a b-invariant edge";
  return out;
}

ClaimCheck check_lfw2020(const Graph& g) {
  ClaimCheck out;
  const int n = g.order();
  std::string_view family;
  if (n >= 10 && n % 4 == 2 && n <= kMaxOrder && are_isomorphic(g, prism(n))) {
    family = "prism";
    bump(out.counts, "prisms_checked");
  } else if (n >= 8 && n % 4 == 0 && n <= kMaxOrder && are_isomorphic(g, moebius_ladder(n))) {
    family = "moebius-ladder";
    bump(out.counts, "moebius_ladders_checked");
  } else {
    return out;
  }
  out.in_universe = true;
  const BrickEdgeSummary s = summarise(g);
  out.holds = 2 * s.b_invariant == n;
  out.values = {{"order", n}, {"b_invariant", s.b_invariant}, {"expected", n / 2}};
  out.detail = std::string(family) + " b_invariant=" + std::to_string(s.b_invariant) +
               " expected=" + std::to_string(n / 2);
  return out;
}

bool solidity_gated(Claim c) {
  return c == Claim::kMainTheorem || c == Claim::kLemmaSolidRemovableB ||
         c == Claim::kLemmaTwoNonremovable || c == Claim::kLemmaTwoNonsolitary;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ClaimCheck check_lovasz(const Graph& g, const VerifyOptions& options) {
  ClaimCheck out;
  if (!is_matching_covered(g)) return out;
  out.in_universe = true;
  bump(out.counts, "matching_covered");
  const std::size_t cuts = nontrivial_tight_cuts(g).size();
  if (cuts > 0) bump(out.counts, "with_nontrivial_tight_cut");
  const DecompositionResult reference = tight_cut_decomposition(g);
  std::mt19937_64 rng(options.seed ^ fnv1a(to_graph6(g)));
  int mismatches = 0;
  for (int run = 0; run < options.decomposition_runs; ++run) {
    if (!same_leaves(reference, tight_cut_decomposition(g, rng))) ++mismatches;
  }
  bump(out.counts, "decompositions", options.decomposition_runs);
  out.holds = mismatches == 0;
  out.values = {{"leaves", static_cast<std::int64_t>(reference.leaves.size())},
                {"bricks", reference.brick_count},
                {"top_level_tight_cuts", static_cast<std::int64_t>(cuts)},
                {"mismatched_runs", mismatches}};
  out.detail = "leaves=" + std::to_string(reference.leaves.size()) +
               " bricks=" + std::to_string(reference.brick_count) +
               " tight_cuts=" + std::to_string(cuts);
  if (!out.holds)
    out.detail += "; " + std::to_string(mismatches) + " randomised runs gave different leaves";
  return out;
}

}  // namespace

std::string_view claim_id(Claim c) {
  for (const auto& [claim, id] : kClaimIds)
    if (claim == c) return id;
  return "unknown";
}

std::optional<Claim> parse_claim(std::string_view id) {
  for (const auto& [claim, known] : kClaimIds)
    if (known == id) return claim;
  return std::nullopt;
}

std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (const auto& [claim, id] : kClaimIds) out.push_back(claim);
  return out;
}

std::int64_t tally(const Tallies& t, std::string_view name) {
  for (const auto& [key, value] : t)
    if (key == name) return value;
  return 0;
}

ClaimCheck check_graph(Claim claim, const Graph& g, const VerifyOptions& options) {
  ClaimCheck out;
  switch (claim) {
    case Claim::kMainTheorem: out = check_main_theorem(g, options); break;
    case Claim::kLemmaSolidRemovableB: out = check_solid_removable_b(g, options); break;
    case Claim::kLemmaTwoNonremovable: out = check_vertex_bound(g, options, false); break;
    case Claim::kLemmaTwoNonsolitary: out = check_vertex_bound(g, options, true); break;
    case Claim::kLemmaWheelSolitary: out = check_wheel_solitary(g); break;
    case Claim::kClm2002Existence: out = check_clm2002(g); break;
    case Claim::kLfw2020Extremal: out = check_lfw2020(g); break;
    case Claim::kLovaszUniqueness: out = check_lovasz(g, options); break;
  }
  bump(out.counts, "graphs");
  if (out.in_universe && !out.holds) bump(out.counts, "violations");
  return out;
}

VerificationReport verify_claim(Claim claim, const CorpusSource& source,
                                const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = std::string(claim_id(claim));
  report.universe = source.describe();
  if (!options.require_solid && solidity_gated(claim)) report.universe += "; solidity hypothesis dropped";
  for (const std::string& name : tally_names(claim)) report.tallies.emplace_back(name, 0);

  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, workers);
  constexpr std::size_t kBatch = 4096;

  CorpusReader reader(source);
  std::uint64_t index = 0;
  std::vector<Graph> batch;
  std::vector<ClaimCheck> results;
  auto flush = [&] {
    results.assign(batch.size(), ClaimCheck{});
    auto work = [&](std::size_t first) {
      for (std::size_t i = first; i < batch.size(); i += workers)
        results[i] = check_graph(claim, batch[i], options);
    };
    if (workers == 1 || batch.size() < 2) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (std::size_t i = 0; i < batch.size(); ++i, ++index) {
      const ClaimCheck& r = results[i];
      for (const auto& [name, value] : r.counts) bump(report.tallies, name, value);
      if (!r.in_universe) continue;
      const std::string code = to_graph6(batch[i]);
      if (!r.holds && !report.counterexample) {
        report.passed = false;
        report.counterexample = Counterexample{code, r.detail};
      }
      if (options.keep_rows) report.rows.push_back({index, code, r.holds, r.detail, r.values});
    }
    batch.clear();
  };
  while (std::optional<Graph> g = reader.next()) {
    batch.push_back(std::move(*g));
    if (batch.size() == kBatch) flush();
  }
  flush();
  report.stages = reader.stage_counts();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

VerificationReport verify_main_theorem(const CorpusSource& source, const VerifyOptions& options) {
  return verify_claim(Claim::kMainTheorem, source, options);
}

}  // namespace mcg
