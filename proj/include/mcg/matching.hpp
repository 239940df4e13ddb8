#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// Set of pairwise disjoint edges, kept sorted.
class Matching {
 public:
  Matching() = default;
  /// Throws std::invalid_argument if two edges share an endpoint.
  explicit Matching(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  VertexSet covered() const { return covered_; }
  bool contains(const Edge& e) const;
  std::optional<Vertex> mate(Vertex v) const;

  /// Every edge belongs to g.
  bool is_matching_of(const Graph& g) const;
  bool is_perfect_in(const Graph& g) const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

 private:
  std::vector<Edge> edges_;
  VertexSet covered_ = 0;
};

/// Maximum cardinality matching (Edmonds' blossom algorithm).
Matching max_matching(const Graph& g);

/// True for the 0-vertex graph, false for every odd order.
bool has_perfect_matching(const Graph& g);

/// Memoised "does G[S] have a perfect matching" over vertex subsets of one
/// graph. Not thread-safe; use one instance per thread.
class Matchability {
 public:
  explicit Matchability(const Graph& g);

  bool perfectly_matchable(VertexSet s);

 private:
  bool search(VertexSet s);

  const Graph* graph_;
  std::vector<std::int8_t> dense_;  // -1 unknown, 0/1 answer; used when n <= 22
  std::unordered_map<VertexSet, bool> sparse_;
};

/// Backtracks on the lowest uncovered vertex, trying its neighbours in
/// increasing order; branches whose residual graph has no perfect matching
/// are pruned. The visiting order is therefore deterministic.
void for_each_perfect_matching(const Graph& g, const std::function<void(const Matching&)>& visit);
std::vector<Matching> enumerate_perfect_matchings(const Graph& g);

std::uint64_t count_perfect_matchings(const Graph& g);
/// Number of perfect matchings of G[S].
std::uint64_t count_perfect_matchings(const Graph& g, VertexSet s);
/// Throws std::invalid_argument when e is not an edge of g.
std::uint64_t count_pm_containing(const Graph& g, const Edge& e);

// --- alternating structure -------------------------------------------------

enum class AlternatingKind { kPath, kCycle };
enum class MatchingSide { kFirst, kSecond };

/// A component of the subgraph induced by the symmetric difference of two
/// matchings. tags[i] names the matching holding the edge between
/// vertices[i] and vertices[i + 1] (wrapping around for cycles).
struct AlternatingComponent {
  AlternatingKind kind = AlternatingKind::kPath;
  std::vector<Vertex> vertices;
  std::vector<MatchingSide> tags;

  std::size_t length() const { return tags.size(); }
};

/// Components ordered by smallest vertex. Paths start at their smaller end;
/// cycles start at their smallest vertex and continue towards its smaller
/// neighbour. Throws std::invalid_argument unless both are matchings of g.
std::vector<AlternatingComponent> symmetric_difference_components(const Graph& g,
                                                                  const Matching& m1,
                                                                  const Matching& m2);

/// A cycle of g whose edges alternate between m and E(g) \ m, as a vertex
/// sequence, or nullopt. For a perfect matching m this is empty iff m is
/// the only perfect matching of g.
std::optional<std::vector<Vertex>> find_alternating_cycle(const Graph& g, const Matching& m);
bool exists_alternating_cycle(const Graph& g, const Matching& m);

/// For x != y: an x-y path alternating with respect to m whose first and
/// last edges are not in m. For x == y: an odd cycle C through x such that
/// m restricted to E(C) is the perfect matching of the path C - x.
/// Exhaustive with memoisation over visited sets; intended for n <= 16.
bool exists_open_alternating_path(const Graph& g, const Matching& m, Vertex x, Vertex y);

}  // namespace mcg
