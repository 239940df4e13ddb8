#include "mcg/graph.hpp"

#include <algorithm>

#include "mcg/graph_ops.hpp"

namespace mcg {

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(cardinality(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest_vertex(s));
  return out;
}

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int order) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("graph order " + std::to_string(order) +
                                " outside 0.." + std::to_string(kMaxOrder));
  adjacency_.assign(order, 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : order();
  for (Vertex v = 0; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  return contains(adjacency_[a], b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < order(); ++u) {
    VertexSet later = adjacency_[u] & ~full_set(u + 1);
    for (; later != 0; later &= later - 1) out.emplace_back(u, lowest_vertex(later));
  }
  return out;
}

void Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
  if (has_edge(a, b))
    throw std::invalid_argument("parallel edge " + to_string(Edge(a, b)));
  adjacency_[a] |= singleton(b);
  adjacency_[b] |= singleton(a);
  ++size_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b)) throw std::invalid_argument("no edge " + to_string(Edge(a, b)));
  adjacency_[a] &= ~singleton(b);
  adjacency_[b] &= ~singleton(a);
  --size_;
}

// ---------------------------------------------------------------------------

namespace {

void check_subset(const Graph& g, VertexSet s) {
  if ((s & ~g.vertices()) != 0)
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
}

}  // namespace

Relabeled delete_vertices(const Graph& g, VertexSet removed) {
  check_subset(g, removed);
  Relabeled out;
  out.old_to_new.assign(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!contains(removed, v)) out.old_to_new[v] = next++;
  out.graph = Graph(next);
  for (const Edge& e : g.edges()) {
    Vertex a = out.old_to_new[e.u];
    Vertex b = out.old_to_new[e.v];
    if (a >= 0 && b >= 0) out.graph.add_edge(a, b);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet kept) {
  check_subset(g, kept);
  return delete_vertices(g, g.vertices() & ~kept).graph;
}

Graph delete_edge(const Graph& g, const Edge& e) {
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<Edge> boundary(const Graph& g, const Shore& x) {
  check_subset(g, x.members);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (contains(x.members, e.u) != contains(x.members, e.v)) out.push_back(e);
  return out;
}

VertexSet neighborhood(const Graph& g, VertexSet x) {
  VertexSet out = 0;
  for (VertexSet s = x; s != 0; s &= s - 1) out |= g.neighbors(lowest_vertex(s));
  return out & ~x;
}

Relabeled contract_shore(const Graph& g, const Shore& x) {
  check_subset(g, x.members);
  if (x.size() < 1 || x.size() > g.order() - 1)
    throw std::invalid_argument("contraction shore must satisfy 1 <= |X| <= n-1");
  Relabeled out;
  out.old_to_new.assign(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!contains(x.members, v)) out.old_to_new[v] = next++;
  const Vertex merged = next;
  for (Vertex v = 0; v < g.order(); ++v)
    if (contains(x.members, v)) out.old_to_new[v] = merged;
  out.graph = Graph(merged + 1);
  for (const Edge& e : g.edges()) {
    Vertex a = out.old_to_new[e.u];
    Vertex b = out.old_to_new[e.v];
    if (a != b && !out.graph.has_edge(a, b)) out.graph.add_edge(a, b);
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet within) {
  if (within == 0) return true;
  VertexSet seen = singleton(lowest_vertex(within));
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(lowest_vertex(s));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

namespace {

// Whether removing some subset of exactly `size` vertices, chosen from
// `candidates`, disconnects what remains.
bool has_separator(const Graph& g, VertexSet candidates, int size, VertexSet removed) {
  if (size == 0) {
    VertexSet rest = g.vertices() & ~removed;
    return cardinality(rest) >= 2 && !is_connected(g, rest);
  }
  for (VertexSet s = candidates; s != 0; s &= s - 1) {
    Vertex v = lowest_vertex(s);
    VertexSet later = s & ~singleton(v);
    if (has_separator(g, later, size - 1, removed | singleton(v))) return true;
  }
  return false;
}

bool has_separator_of_size(const Graph& g, int size) {
  return has_separator(g, g.vertices(), size, 0);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  const int delta = g.min_degree();
  if (delta == n - 1) return n - 1;
  for (int k = 0; k < delta; ++k)
    if (has_separator_of_size(g, k)) return k;
  return delta;
}

bool is_k_connected(const Graph& g, int k) {
  if (g.order() <= k) return false;
  if (g.min_degree() < k) return false;
  for (int s = 0; s < k; ++s)
    if (has_separator_of_size(g, s)) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : members(g.neighbors(v))) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace mcg
