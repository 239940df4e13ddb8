#pragma once

#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// A vertex subset X of a graph, 1 <= |X| <= n-1. The cut it defines is
/// computed on demand by boundary().
struct Shore {
  VertexSet members = 0;

  int size() const { return cardinality(members); }
  Shore complement(int order) const { return Shore{full_set(order) & ~members}; }
  /// A cut is trivial when one side is a single vertex.
  bool is_nontrivial(int order) const { return size() >= 2 && size() <= order - 2; }

  friend bool operator==(const Shore&, const Shore&) = default;
};

/// Result of an operation that renumbers vertices. old_to_new[v] is the
/// new index of old vertex v, or -1 when v was deleted.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> old_to_new;
};

Relabeled delete_vertices(const Graph& g, VertexSet removed);
Graph induced_subgraph(const Graph& g, VertexSet kept);
Graph delete_edge(const Graph& g, const Edge& e);
Graph complement(const Graph& g);

std::vector<Edge> boundary(const Graph& g, const Shore& x);
/// N(X): vertices outside X with a neighbour inside X.
VertexSet neighborhood(const Graph& g, VertexSet x);

/// Shrinks X to a single vertex adjacent to exactly N(X). Vertices outside
/// X keep their relative order; the contracted vertex is the last one.
/// Every member of X maps to the contracted vertex in old_to_new.
Relabeled contract_shore(const Graph& g, const Shore& x);

/// Whether G[within] is connected. The empty set counts as connected.
bool is_connected(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

/// Size of a minimum vertex cut; n-1 for complete graphs. Exhaustive over
/// candidate cuts smaller than the minimum degree.
int vertex_connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);

bool is_bipartite(const Graph& g);

}  // namespace mcg
