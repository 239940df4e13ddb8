#include <functional>
#include <stdexcept>

#include "mcg/graph6.hpp"
#include "mcg/isomorphism.hpp"
#include "mcg/structure.hpp"

namespace mcg {

namespace {

using CutChooser = std::function<std::optional<Shore>(const Graph&)>;

void decompose(const Graph& piece, const CutChooser& choose, DecompositionResult& out) {
  std::optional<Shore> cut = choose(piece);
  if (!cut) {
    LeafKind kind = is_bipartite(piece) ? LeafKind::kBrace : LeafKind::kBrick;
    if (kind == LeafKind::kBrick) ++out.brick_count;
    out.leaves.push_back({piece, kind});
    return;
  }
  const std::string name = to_graph6(piece);
  const Shore complement_side = cut->complement(piece.order());
  for (ShrunkSide side : {ShrunkSide::kShore, ShrunkSide::kComplement}) {
    const Shore& shrunk = side == ShrunkSide::kShore ? *cut : complement_side;
    Graph next = contract_shore(piece, shrunk).graph;
    if (!is_matching_covered(next))
      throw std::logic_error("tight cut contraction of " + name + " is not matching covered");
    out.trace.push_back({name, *cut, side});
    decompose(next, choose, out);
  }
}

DecompositionResult run(const Graph& g, const CutChooser& choose) {
  if (!is_matching_covered(g))
    throw std::invalid_argument("tight cut decomposition needs a matching covered graph");
  DecompositionResult out;
  decompose(g, choose, out);
  return out;
}

}  // namespace

DecompositionResult tight_cut_decomposition(const Graph& g) {
  return run(g, [](const Graph& piece) { return find_nontrivial_tight_cut(piece); });
}

DecompositionResult tight_cut_decomposition(const Graph& g, std::mt19937_64& rng) {
  return run(g, [&rng](const Graph& piece) -> std::optional<Shore> {
    std::vector<Shore> cuts = nontrivial_tight_cuts(piece);
    if (cuts.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
    return cuts[pick(rng)];
  });
}

int brick_count(const Graph& g) { return tight_cut_decomposition(g).brick_count; }

bool same_leaves(const DecompositionResult& a, const DecompositionResult& b) {
  if (a.leaves.size() != b.leaves.size() || a.brick_count != b.brick_count) return false;
  std::vector<bool> used(b.leaves.size(), false);
  for (const DecompositionLeaf& leaf : a.leaves) {
    bool matched = false;
    for (std::size_t i = 0; i < b.leaves.size() && !matched; ++i) {
      if (used[i] || b.leaves[i].kind != leaf.kind) continue;
      if (are_isomorphic(leaf.graph, b.leaves[i].graph)) {
        used[i] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace mcg
