#include <functional>
#include <set>
#include <stdexcept>

#include "mcg/graph_ops.hpp"
#include "mcg/matching.hpp"

namespace mcg {

namespace {

void require_matching_of(const Graph& g, const Matching& m, const char* name) {
  if (!m.is_matching_of(g))
    throw std::invalid_argument(std::string(name) + " is not a matching of the given graph");
}

std::vector<Vertex> mate_table(const Graph& g, const Matching& m) {
  std::vector<Vertex> mate(g.order(), -1);
  for (const Edge& e : m.edges()) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

}  // namespace

std::vector<AlternatingComponent> symmetric_difference_components(const Graph& g,
                                                                  const Matching& m1,
                                                                  const Matching& m2) {
  require_matching_of(g, m1, "first matching");
  require_matching_of(g, m2, "second matching");
  const int n = g.order();
  // Neighbour of v along an edge of m1 \ m2 (first) or m2 \ m1 (second).
  std::vector<Vertex> first(n, -1);
  std::vector<Vertex> second(n, -1);
  for (const Edge& e : m1.edges())
    if (!m2.contains(e)) {
      first[e.u] = e.v;
      first[e.v] = e.u;
    }
  for (const Edge& e : m2.edges())
    if (!m1.contains(e)) {
      second[e.u] = e.v;
      second[e.v] = e.u;
    }
  auto degree = [&](Vertex v) { return (first[v] >= 0 ? 1 : 0) + (second[v] >= 0 ? 1 : 0); };

  std::vector<AlternatingComponent> out;
  std::vector<bool> seen(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start] || degree(start) == 0) continue;
    // Collect the component to learn its kind and its canonical start.
    std::vector<Vertex> stack{start};
    std::vector<Vertex> comp;
    seen[start] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : {first[v], second[v]})
        if (w >= 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    AlternatingComponent c;
    Vertex origin = start;  // smallest vertex of the component
    c.kind = AlternatingKind::kCycle;
    for (Vertex v : comp)
      if (degree(v) == 1) {
        if (c.kind == AlternatingKind::kCycle || v < origin) origin = v;
        c.kind = AlternatingKind::kPath;
      }
    Vertex prev = -1;
    Vertex v = origin;
    if (c.kind == AlternatingKind::kCycle) {
      // Head towards the smaller neighbour.
      Vertex towards = std::min(first[v], second[v]);
      c.vertices.push_back(v);
      c.tags.push_back(towards == first[v] ? MatchingSide::kFirst : MatchingSide::kSecond);
      prev = v;
      v = towards;
      while (v != origin) {
        c.vertices.push_back(v);
        Vertex next = first[v] != prev ? first[v] : second[v];
        c.tags.push_back(next == first[v] ? MatchingSide::kFirst : MatchingSide::kSecond);
        prev = v;
        v = next;
      }
    } else {
      for (;;) {
        c.vertices.push_back(v);
        Vertex next = -1;
        MatchingSide side = MatchingSide::kFirst;
        if (first[v] >= 0 && first[v] != prev) {
          next = first[v];
        } else if (second[v] >= 0 && second[v] != prev) {
          next = second[v];
          side = MatchingSide::kSecond;
        }
        if (next < 0) break;
        c.tags.push_back(side);
        prev = v;
        v = next;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::vector<Vertex>> find_alternating_cycle(const Graph& g, const Matching& m) {
  require_matching_of(g, m, "matching");
  // Every vertex of an alternating cycle is covered by m, so the search
  // happens inside G[covered(m)], where m is perfect. There, an alternating
  // cycle through e in m exists iff G - e still has a perfect matching.
  Relabeled h = delete_vertices(g, g.vertices() & ~m.covered());
  std::vector<Vertex> new_to_old(h.graph.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (h.old_to_new[v] >= 0) new_to_old[h.old_to_new[v]] = v;
  std::vector<Edge> local;
  for (const Edge& e : m.edges()) local.emplace_back(h.old_to_new[e.u], h.old_to_new[e.v]);
  const Matching mh(local);

  for (const Edge& e : mh.edges()) {
    Graph without = delete_edge(h.graph, e);
    Matching other = max_matching(without);
    if (!other.is_perfect_in(without)) continue;
    for (const AlternatingComponent& c : symmetric_difference_components(h.graph, mh, other)) {
      bool through = false;
      for (Vertex v : c.vertices) through = through || v == e.u;
      if (!through) continue;
      std::vector<Vertex> cycle;
      for (Vertex v : c.vertices) cycle.push_back(new_to_old[v]);
      return cycle;
    }
  }
  return std::nullopt;
}

bool exists_alternating_cycle(const Graph& g, const Matching& m) {
  return find_alternating_cycle(g, m).has_value();
}

bool exists_open_alternating_path(const Graph& g, const Matching& m, Vertex x, Vertex y) {
  require_matching_of(g, m, "matching");
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw std::invalid_argument("path end outside the graph");
  const std::vector<Vertex> mate = mate_table(g, m);
  const bool closed = x == y;

  // State: the walk has visited `used` and stands at `at`, where the next
  // edge must lie outside m. States that failed once fail again.
  std::set<std::pair<VertexSet, Vertex>> failed;
  std::function<bool(VertexSet, Vertex)> walk = [&](VertexSet used, Vertex at) -> bool {
    if (failed.contains({used, at})) return false;
    for (Vertex w : members(g.neighbors(at))) {
      if (mate[at] == w) continue;
      if (w == y && !(closed && at == x)) return true;
      if (contains(used, w) || mate[w] < 0) continue;
      Vertex partner = mate[w];
      if (contains(used, partner) || partner == y) continue;
      if (walk(used | singleton(w) | singleton(partner), partner)) return true;
    }
    failed.insert({used, at});
    return false;
  };
  return walk(singleton(x), x);
}

}  // namespace mcg
