#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcg/families.hpp"
#include "mcg/graph.hpp"

namespace mcg {

/// Predicates a corpus can be narrowed by, applied in the declared order.
enum class Filter {
  kEvenOrder,
  kConnected,
  kMinDegree3,
  kThreeConnected,
  kMatchingCovered,
  kBrick,
  kSolid,
};

std::string_view filter_name(Filter f);
std::optional<Filter> parse_filter(std::string_view name);
bool passes(Filter f, const Graph& g);

/// Builtin enumeration cap. Larger corpora come from graph6 files.
inline constexpr int kBuiltinMaxOrder = 8;

/// graph6 lines from a file; "-" reads standard input, a ".gz" suffix is
/// decompressed.
struct FileOrigin {
  std::string path;
};

/// Every graph with min_order <= n <= max_order, one per isomorphism class.
struct BuiltinOrigin {
  int min_order = 1;
  int max_order = kBuiltinMaxOrder;
};

struct FamilyOrigin {
  std::vector<FamilySpec> members;
};

/// Graphs supplied directly (inline graph6, test fixtures).
struct ListOrigin {
  std::vector<Graph> graphs;
  std::string label = "graph list";
};

/// Matching covered graphs obtained by perturbing family members and
/// splices of family members with a few random edge toggles.
struct RandomOrigin {
  std::size_t count = 100;
  int max_order = 10;
  std::uint64_t seed = 1;
};

using CorpusOrigin = std::variant<FileOrigin, BuiltinOrigin, FamilyOrigin, ListOrigin, RandomOrigin>;

struct CorpusSource {
  CorpusOrigin origin;
  std::vector<Filter> filters;

  std::string describe() const;
};

struct StageCount {
  std::string stage;
  std::uint64_t count = 0;

  friend bool operator==(const StageCount&, const StageCount&) = default;
};

/// Ingestion failure. line() is 1-based for file origins and 0 otherwise.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Streams the graphs of a source through its filters. Stage counts are
/// "input" followed by one entry per filter, each counting the graphs that
/// survived it so far.
class CorpusReader {
 public:
  explicit CorpusReader(CorpusSource source);
  ~CorpusReader();
  CorpusReader(const CorpusReader&) = delete;
  CorpusReader& operator=(const CorpusReader&) = delete;

  std::optional<Graph> next();
  const std::vector<StageCount>& stage_counts() const { return stages_; }

 private:
  std::optional<Graph> next_raw();

  CorpusSource source_;
  std::vector<StageCount> stages_;
  std::vector<Graph> pending_;  // materialised origins
  std::size_t cursor_ = 0;
  std::unique_ptr<std::istream> file_;
  std::istream* in_ = nullptr;
  std::size_t line_ = 0;
};

/// Drains a source. When stages is non-null it receives the stage counts.
std::vector<Graph> ingest(const CorpusSource& source, std::vector<StageCount>* stages = nullptr);

/// One graph per isomorphism class of the given order, in a deterministic
/// order. Throws std::invalid_argument above kBuiltinMaxOrder.
const std::vector<Graph>& enumerate_graphs(int order);

/// G1 - x and G2 - y joined by a bijection between N(x) and N(y) taken in
/// increasing vertex order. Requires deg(x) == deg(y).
Graph splice(const Graph& g1, Vertex x, const Graph& g2, Vertex y);

std::vector<Graph> random_matching_covered_graphs(const RandomOrigin& spec);

}  // namespace mcg
