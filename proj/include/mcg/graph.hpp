#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

using Vertex = int;

/// Bitmask over vertex indices. Bit v is set iff vertex v is a member.
using VertexSet = std::uint64_t;

/// Hard limit imposed by the bitmask representation. The exhaustive
/// algorithms in this library are only intended for much smaller orders.
inline constexpr int kMaxOrder = 64;

/// Orders up to which every exhaustive routine is expected to finish at
/// desk scale.
inline constexpr int kSupportedOrder = 16;

constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }

constexpr int cardinality(VertexSet s) { return std::popcount(s); }

constexpr Vertex lowest_vertex(VertexSet s) { return std::countr_zero(s); }

std::vector<Vertex> members(VertexSet s);

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr VertexSet ends() const { return singleton(u) | singleton(v); }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return size_; }
  VertexSet vertices() const { return full_set(order()); }

  VertexSet neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return cardinality(adjacency_.at(v)); }
  int min_degree() const;
  int max_degree() const;

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Edges in lexicographic (u, v) order. This order defines edge indices
  /// everywhere in the library.
  std::vector<Edge> edges() const;

  /// Throws std::invalid_argument on loops, parallel edges or unknown
  /// endpoints.
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adjacency_;
  int size_ = 0;
};

}  // namespace mcg
