#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// Colour refinement (1-dimensional Weisfeiler-Leman) with colours that are
/// comparable across graphs. Isomorphic graphs get equal colour multisets.
std::vector<std::uint64_t> refined_colors(const Graph& g);

/// Isomorphism invariant: order, size and the refined colour multiset.
std::uint64_t invariant_hash(const Graph& g);

/// A bijection p with g.has_edge(u, v) == h.has_edge(p[u], p[v]), if any.
/// Backtracking over refined colour classes; intended for n <= 16 and
/// may be slow on large highly regular graphs.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& g, const Graph& h);

/// Keeps one representative per isomorphism class, in insertion order.
class IsomorphismClasses {
 public:
  /// Returns true iff g was not isomorphic to any stored representative.
  bool insert(const Graph& g);
  /// Index of the stored representative isomorphic to g, if any.
  std::optional<std::size_t> find(const Graph& g) const;

  const std::vector<Graph>& representatives() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

 private:
  std::optional<std::size_t> find(const Graph& g, std::uint64_t key) const;

  std::vector<Graph> reps_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

}  // namespace mcg
