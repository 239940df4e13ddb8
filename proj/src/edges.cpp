#include "mcg/edges.hpp"

#include <stdexcept>

#include "mcg/graph_ops.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"

namespace mcg {

namespace {

void require_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("no edge " + to_string(e));
}

}  // namespace

bool is_removable(const Graph& g, const Edge& e) {
  require_edge(g, e);
  return is_matching_covered(delete_edge(g, e));
}

bool is_b_invariant(const Graph& g, const Edge& e) {
  if (!is_removable(g, e)) return false;
  return brick_count(delete_edge(g, e)) == brick_count(g);
}

bool is_solitary(const Graph& g, const Edge& e) {
  require_edge(g, e);
  return count_pm_containing(g, e) == 1;
}

std::vector<EdgeClassification> classify_all_edges(const Graph& g) {
  if (!is_matching_covered(g))
    throw std::invalid_argument("edge classification needs a matching covered graph");
  const PerfectMatchingList pms(g);
  const int bricks = brick_count(g);
  std::vector<EdgeClassification> out;
  for (const Edge& e : g.edges()) {
    EdgeClassification c;
    c.edge = e;
    c.pm_count = pms.containing(e);
    c.in_some_pm = c.pm_count >= 1;
    c.solitary = c.pm_count == 1;
    const Graph without = delete_edge(g, e);
    c.removable = is_matching_covered(without);
    c.b_invariant = c.removable && brick_count(without) == bricks;
    out.push_back(c);
  }
  return out;
}

std::vector<VertexTally> vertex_tallies(const Graph& g,
                                        const std::vector<EdgeClassification>& edges) {
  std::vector<VertexTally> out(g.order());
  for (const EdgeClassification& c : edges) {
    for (Vertex v : {c.edge.u, c.edge.v}) {
      if (!c.removable) ++out[v].nonremovable_incident;
      if (!c.solitary) ++out[v].nonsolitary_incident;
    }
  }
  return out;
}

std::vector<VertexTally> vertex_tallies(const Graph& g) {
  return vertex_tallies(g, classify_all_edges(g));
}

}  // namespace mcg
