#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/graph_ops.hpp"
#include "mcg/matching.hpp"

namespace mcg {

// --- matching covered graphs and tight cuts --------------------------------

/// Connected, order >= 2, and every edge lies in some perfect matching.
bool is_matching_covered(const Graph& g);

/// Every perfect matching of g meets the cut of x in exactly one edge.
/// Throws std::invalid_argument unless 1 <= |X| <= n-1.
bool is_tight_cut(const Graph& g, const Shore& x);

/// Perfect matchings stored as per-edge endpoint masks, for fast crossing
/// counts against many shores.
class PerfectMatchingList {
 public:
  explicit PerfectMatchingList(const Graph& g);

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  /// Every listed matching crosses the cut of x exactly once.
  bool crosses_once(VertexSet x) const;
  /// Number of listed matchings containing e.
  std::uint64_t containing(const Edge& e) const;

 private:
  std::size_t count_ = 0;
  std::size_t width_ = 0;            // edges per matching
  std::vector<VertexSet> pairs_;     // count_ * width_ endpoint masks
};

/// Every nontrivial tight cut of a matching covered graph, one shore per
/// cut (the side not containing vertex n-1), in increasing bitmask order.
std::vector<Shore> nontrivial_tight_cuts(const Graph& g);

/// The lowest-bitmask shore of a nontrivial tight cut, or nullopt when g
/// is a brick or a brace. Expects a matching covered graph.
std::optional<Shore> find_nontrivial_tight_cut(const Graph& g);

// --- tight cut decomposition -----------------------------------------------

enum class LeafKind { kBrick, kBrace };

struct DecompositionLeaf {
  Graph graph;
  LeafKind kind = LeafKind::kBrace;
};

/// Which side of the chosen cut was shrunk to produce the next piece.
enum class ShrunkSide { kShore, kComplement };

struct DecompositionStep {
  std::string piece;  // graph6 of the graph being split
  Shore shore;        // in the piece's own labelling
  ShrunkSide shrunk = ShrunkSide::kShore;
};

struct DecompositionResult {
  std::vector<DecompositionLeaf> leaves;
  int brick_count = 0;
  std::vector<DecompositionStep> trace;
};

/// Splits along the lowest-bitmask nontrivial tight cut until every piece
/// is a brick or a brace. Pieces recurse G/X first, then G/X-bar.
/// Throws std::invalid_argument if g is not matching covered.
DecompositionResult tight_cut_decomposition(const Graph& g);

/// Same, but each split uses a tight cut drawn uniformly from all
/// nontrivial tight cuts of the current piece.
DecompositionResult tight_cut_decomposition(const Graph& g, std::mt19937_64& rng);

/// Number of bricks in any tight cut decomposition of g.
int brick_count(const Graph& g);

/// Leaf lists agree as multisets up to isomorphism, with equal tags.
bool same_leaves(const DecompositionResult& a, const DecompositionResult& b);

// --- bricks, odd cycles, solidity, wheels ----------------------------------

/// 3-connected and G - {u, v} has a perfect matching for every pair u != v.
bool is_brick(const Graph& g);

/// A cycle as its vertex sequence; consecutive vertices (and last, first)
/// are adjacent.
using Cycle = std::vector<Vertex>;

/// Every simple odd cycle once. Cycles come in increasing length; within a
/// length, by smallest vertex (which starts the sequence), then in
/// depth-first order, with the second vertex smaller than the last.
std::vector<Cycle> enumerate_odd_cycles(const Graph& g);

struct NonsolidWitness {
  Cycle cycle1;
  Cycle cycle2;
  Matching remainder;  // perfect matching of G - V(C1) - V(C2)
};

struct SolidityResult {
  bool solid = true;
  std::optional<NonsolidWitness> witness;
};

/// Solidity of a brick. Throws std::invalid_argument for non-bricks.
/// Searches vertex sets that carry an odd cycle, ordered by (size,
/// bitmask), over pairs in lexicographic order; the first disjoint pair
/// whose remainder is perfectly matchable is the witness.
SolidityResult check_solidity(const Graph& g);
bool is_solid(const Graph& g);

/// Re-validates a witness against g from scratch.
bool validate_witness(const Graph& g, const NonsolidWitness& w);

bool is_wheel(const Graph& g);

}  // namespace mcg
