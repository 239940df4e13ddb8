#pragma once

#include <cstdint>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

struct EdgeClassification {
  Edge edge;
  bool in_some_pm = false;
  std::uint64_t pm_count = 0;
  bool removable = false;
  bool b_invariant = false;
  bool solitary = false;
};

/// G - e is matching covered. Throws std::invalid_argument if e is not an
/// edge of g.
bool is_removable(const Graph& g, const Edge& e);

/// Removable with b(G - e) = b(G). False (not an error) for nonremovable
/// edges. Expects a matching covered graph.
bool is_b_invariant(const Graph& g, const Edge& e);

/// Contained in exactly one perfect matching.
bool is_solitary(const Graph& g, const Edge& e);

/// One record per edge, in Graph::edges() order. The perfect matching list
/// of g and b(g) are computed once. Throws std::invalid_argument unless g
/// is matching covered.
std::vector<EdgeClassification> classify_all_edges(const Graph& g);

struct VertexTally {
  int nonremovable_incident = 0;
  int nonsolitary_incident = 0;
};

std::vector<VertexTally> vertex_tallies(const Graph& g,
                                        const std::vector<EdgeClassification>& edges);
std::vector<VertexTally> vertex_tallies(const Graph& g);

}  // namespace mcg
