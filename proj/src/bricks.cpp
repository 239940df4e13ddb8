#include <algorithm>

#include "mcg/structure.hpp"

namespace mcg {

bool is_brick(const Graph& g) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0 || g.min_degree() < 3) return false;
  Matchability oracle(g);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!oracle.perfectly_matchable(g.vertices() & ~(singleton(u) | singleton(v)))) return false;
  return is_k_connected(g, 3);
}

namespace {

void extend_cycles(const Graph& g, Vertex start, Cycle& path, VertexSet used,
                   std::vector<Cycle>& out) {
  const Vertex last = path.back();
  if (path.size() >= 3 && path.size() % 2 == 1 && g.has_edge(last, start) && path[1] < last)
    out.push_back(path);
  VertexSet options = g.neighbors(last) & ~used & ~full_set(start + 1);
  for (; options != 0; options &= options - 1) {
    Vertex w = lowest_vertex(options);
    path.push_back(w);
    extend_cycles(g, start, path, used | singleton(w), out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Cycle> enumerate_odd_cycles(const Graph& g) {
  std::vector<Cycle> out;
  for (Vertex start = 0; start < g.order(); ++start) {
    Cycle path{start};
    extend_cycles(g, start, path, singleton(start), out);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Cycle& a, const Cycle& b) { return a.size() < b.size(); });
  return out;
}

bool is_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  if (g.size() != 2 * (n - 1)) return false;
  if (n == 4) return g.min_degree() == 3;  // K4
  Vertex hub = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != n - 1) continue;
    if (hub >= 0) return false;
    hub = v;
  }
  if (hub < 0) return false;
  const VertexSet rim = g.vertices() & ~singleton(hub);
  for (Vertex v : members(rim))
    if (cardinality(g.neighbors(v) & rim) != 2) return false;
  return is_connected(g, rim);
}

}  // namespace mcg
