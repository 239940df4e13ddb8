#include <algorithm>
#include <stdexcept>

#include "mcg/structure.hpp"

namespace mcg {

namespace {

constexpr int kSolidityMaxOrder = 20;

// For every vertex subset S, the set of vertices v such that G[S] has a
// Hamiltonian path from the lowest vertex of S to v.
class HamiltonianPaths {
 public:
  explicit HamiltonianPaths(const Graph& g) : g_(g), ends_(std::size_t{1} << g.order(), 0) {
    const VertexSet all = g.vertices();
    for (Vertex v = 0; v < g.order(); ++v) ends_[singleton(v)] = singleton(v);
    for (VertexSet s = 1; s <= all; ++s) {
      VertexSet reach = ends_[s];
      if (reach == 0) continue;
      const Vertex origin = lowest_vertex(s);
      const VertexSet allowed = all & ~s & ~full_set(origin + 1);
      for (VertexSet r = reach; r != 0; r &= r - 1) {
        VertexSet next = g.neighbors(lowest_vertex(r)) & allowed;
        for (; next != 0; next &= next - 1) {
          Vertex w = lowest_vertex(next);
          ends_[s | singleton(w)] |= singleton(w);
        }
      }
    }
  }

  bool has_cycle(VertexSet s) const {
    return cardinality(s) >= 3 && (ends_[s] & g_.neighbors(lowest_vertex(s))) != 0;
  }

  Cycle cycle(VertexSet s) const {
    const Vertex origin = lowest_vertex(s);
    Cycle reversed;
    Vertex at = lowest_vertex(ends_[s] & g_.neighbors(origin));
    VertexSet left = s;
    while (at != origin) {
      reversed.push_back(at);
      left &= ~singleton(at);
      at = lowest_vertex(ends_[left] & g_.neighbors(at));
    }
    reversed.push_back(origin);
    return Cycle(reversed.rbegin(), reversed.rend());
  }

 private:
  const Graph& g_;
  std::vector<VertexSet> ends_;
};

bool cycle_order(VertexSet a, VertexSet b) {
  int ca = cardinality(a);
  int cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

Matching remainder_matching(const Graph& g, VertexSet rest) {
  Relabeled sub = delete_vertices(g, g.vertices() & ~rest);
  std::vector<Vertex> back(sub.graph.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (sub.old_to_new[v] >= 0) back[sub.old_to_new[v]] = v;
  std::vector<Edge> edges;
  const Matching m = max_matching(sub.graph);
  for (const Edge& e : m.edges()) edges.emplace_back(back[e.u], back[e.v]);
  return Matching(std::move(edges));
}

}  // namespace

SolidityResult check_solidity(const Graph& g) {
  if (g.order() > kSolidityMaxOrder)
    throw std::invalid_argument("solidity search limited to order " +
                                std::to_string(kSolidityMaxOrder));
  if (!is_brick(g)) throw std::invalid_argument("solidity is defined for bricks only");

  const HamiltonianPaths paths(g);
  const VertexSet all = g.vertices();
  std::vector<VertexSet> odd_sets;
  for (VertexSet s = 1; s <= all; ++s)
    if (cardinality(s) % 2 == 1 && paths.has_cycle(s)) odd_sets.push_back(s);
  std::sort(odd_sets.begin(), odd_sets.end(), cycle_order);
  std::vector<bool> carries_odd_cycle(std::size_t{1} << g.order(), false);
  for (VertexSet s : odd_sets) carries_odd_cycle[s] = true;

  Matchability oracle(g);
  for (VertexSet first : odd_sets) {
    // Best partner among odd-cycle sets inside the complement of `first`.
    const VertexSet outside = all & ~first;
    std::optional<VertexSet> partner;
    for (VertexSet t = outside; t != 0; t = (t - 1) & outside) {
      if (!carries_odd_cycle[t]) continue;
      if (partner && !cycle_order(t, *partner)) continue;
      if (oracle.perfectly_matchable(outside & ~t)) partner = t;
    }
    if (!partner) continue;
    NonsolidWitness w{paths.cycle(first), paths.cycle(*partner),
                      remainder_matching(g, outside & ~*partner)};
    return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

bool is_solid(const Graph& g) { return check_solidity(g).solid; }

bool validate_witness(const Graph& g, const NonsolidWitness& w) {
  auto vertex_set = [&](const Cycle& c) -> std::optional<VertexSet> {
    if (c.size() < 3 || c.size() % 2 == 0) return std::nullopt;
    VertexSet s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex v = c[i];
      if (v < 0 || v >= g.order() || contains(s, v)) return std::nullopt;
      if (!g.has_edge(v, c[(i + 1) % c.size()])) return std::nullopt;
      s |= singleton(v);
    }
    return s;
  };
  auto a = vertex_set(w.cycle1);
  auto b = vertex_set(w.cycle2);
  if (!a || !b || (*a & *b) != 0) return false;
  return w.remainder.is_matching_of(g) && w.remainder.covered() == (g.vertices() & ~*a & ~*b);
}

}  // namespace mcg
