#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcg/corpus.hpp"
#include "mcg/graph.hpp"

namespace mcg {

enum class Claim {
  kMainTheorem,
  kLemmaSolidRemovableB,
  kLemmaTwoNonremovable,
  kLemmaTwoNonsolitary,
  kLemmaWheelSolitary,
  kClm2002Existence,
  kLfw2020Extremal,
  kLovaszUniqueness,
};

std::string_view claim_id(Claim c);
std::optional<Claim> parse_claim(std::string_view id);
std::vector<Claim> all_claims();

inline constexpr int kReportSchemaVersion = 1;

/// Ordered name/value pairs; order is part of the report's determinism.
using Tallies = std::vector<std::pair<std::string, std::int64_t>>;

struct Counterexample {
  std::string graph6;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// One row per graph inside the claim's universe.
struct GraphRow {
  std::uint64_t index = 0;  // position in the filtered corpus stream
  std::string graph6;
  bool holds = true;
  std::string detail;
  Tallies values;

  friend bool operator==(const GraphRow&, const GraphRow&) = default;
};

struct VerificationReport {
  int schema_version = kReportSchemaVersion;
  std::string claim;
  std::string universe;
  std::vector<StageCount> stages;
  bool passed = true;
  std::optional<Counterexample> counterexample;  // first violation in corpus order
  Tallies tallies;
  std::vector<GraphRow> rows;
  double seconds = 0.0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  /// Randomised decompositions per graph for lovasz-uniqueness.
  int decomposition_runs = 5;
  std::uint64_t seed = 20240601;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Keep one GraphRow per in-universe graph.
  bool keep_rows = true;
  /// When false, claims stated for solid bricks run on every brick.
  bool require_solid = true;
};

/// Verdict of one claim on one graph, independent of any corpus.
struct ClaimCheck {
  bool in_universe = false;
  bool holds = true;
  std::string detail;
  /// Counters this graph contributes to the report tallies.
  Tallies counts;
  /// Per-graph values recorded on the row.
  Tallies values;
};

ClaimCheck check_graph(Claim claim, const Graph& g, const VerifyOptions& options = {});

VerificationReport verify_claim(Claim claim, const CorpusSource& source,
                                const VerifyOptions& options = {});
VerificationReport verify_main_theorem(const CorpusSource& source,
                                       const VerifyOptions& options = {});

/// Looks up a tally by name; 0 when absent.
std::int64_t tally(const Tallies& t, std::string_view name);

}  // namespace mcg
