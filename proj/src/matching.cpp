#include "mcg/matching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mcg {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("matching edge is a loop");
    if ((covered_ & e.ends()) != 0)
      throw std::invalid_argument("edges of a matching share an endpoint at " + to_string(e));
    covered_ |= e.ends();
  }
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<Vertex> Matching::mate(Vertex v) const {
  if (!mcg::contains(covered_, v)) return std::nullopt;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) return e.other(v);
  return std::nullopt;
}

bool Matching::is_matching_of(const Graph& g) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return g.has_edge(e); });
}

bool Matching::is_perfect_in(const Graph& g) const {
  return is_matching_of(g) && covered_ == g.vertices();
}

// ---------------------------------------------------------------------------

namespace {

// Edmonds' blossom algorithm in the usual array formulation: grow an
// alternating tree from each exposed vertex, shrinking odd cycles by
// relabelling their vertices with a common base.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), mate_(n_, -1), parent_(n_), base_(n_), in_tree_(n_), in_blossom_(n_) {}

  std::vector<Vertex> solve() {
    // Greedy start; the augmenting phase fixes any suboptimality.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) continue;
      for (Vertex w : members(g_.neighbors(v))) {
        if (mate_[w] < 0) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] >= 0) continue;
      Vertex end = find_augmenting_path(root);
      while (end >= 0) {
        Vertex pv = parent_[end];
        Vertex next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Returns the exposed vertex that ends an augmenting path from root, or -1.
  Vertex find_augmenting_path(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    in_tree_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : members(g_.neighbors(v))) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          Vertex b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!in_tree_[i]) {
              in_tree_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          in_tree_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
  std::vector<Vertex> mate = Blossom(g).solve();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  return Matching(std::move(edges));
}

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return 2 * static_cast<int>(max_matching(g).size()) == g.order();
}

// ---------------------------------------------------------------------------

namespace {
constexpr int kDenseMemoOrder = 22;
}

Matchability::Matchability(const Graph& g) : graph_(&g) {
  if (g.order() <= kDenseMemoOrder) dense_.assign(std::size_t{1} << g.order(), -1);
}

bool Matchability::perfectly_matchable(VertexSet s) {
  if (cardinality(s) % 2 != 0) return false;
  return search(s);
}

bool Matchability::search(VertexSet s) {
  if (s == 0) return true;
  if (!dense_.empty()) {
    if (dense_[s] >= 0) return dense_[s] == 1;
  } else if (auto it = sparse_.find(s); it != sparse_.end()) {
    return it->second;
  }
  bool found = false;
  // An isolated vertex inside S settles the question immediately.
  bool isolated = false;
  for (VertexSet t = s; t != 0; t &= t - 1)
    if ((graph_->neighbors(lowest_vertex(t)) & s) == 0) {
      isolated = true;
      break;
    }
  if (!isolated) {
    Vertex v = lowest_vertex(s);
    VertexSet rest = s & ~singleton(v);
    for (VertexSet options = graph_->neighbors(v) & rest; options != 0 && !found;
         options &= options - 1) {
      found = search(rest & ~singleton(lowest_vertex(options)));
    }
  }
  if (!dense_.empty())
    dense_[s] = found ? 1 : 0;
  else
    sparse_.emplace(s, found);
  return found;
}

namespace {

void enumerate(const Graph& g, Matchability& oracle, VertexSet uncovered, std::vector<Edge>& chosen,
               const std::function<void(const Matching&)>& visit) {
  if (uncovered == 0) {
    visit(Matching(chosen));
    return;
  }
  Vertex v = lowest_vertex(uncovered);
  VertexSet rest = uncovered & ~singleton(v);
  for (VertexSet options = g.neighbors(v) & rest; options != 0; options &= options - 1) {
    Vertex w = lowest_vertex(options);
    VertexSet residual = rest & ~singleton(w);
    if (!oracle.perfectly_matchable(residual)) continue;
    chosen.emplace_back(v, w);
    enumerate(g, oracle, residual, chosen, visit);
    chosen.pop_back();
  }
}

std::uint64_t count_within(const Graph& g, VertexSet s,
                           std::unordered_map<VertexSet, std::uint64_t>& memo) {
  if (s == 0) return 1;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  Vertex v = lowest_vertex(s);
  VertexSet rest = s & ~singleton(v);
  std::uint64_t total = 0;
  for (VertexSet options = g.neighbors(v) & rest; options != 0; options &= options - 1)
    total += count_within(g, rest & ~singleton(lowest_vertex(options)), memo);
  memo.emplace(s, total);
  return total;
}

}  // namespace

void for_each_perfect_matching(const Graph& g, const std::function<void(const Matching&)>& visit) {
  if (g.order() % 2 != 0) return;
  Matchability oracle(g);
  if (!oracle.perfectly_matchable(g.vertices())) return;
  std::vector<Edge> chosen;
  enumerate(g, oracle, g.vertices(), chosen, visit);
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, [&](const Matching& m) { out.push_back(m); });
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g, VertexSet s) {
  if ((s & ~g.vertices()) != 0) throw std::invalid_argument("vertex set outside the graph");
  if (cardinality(s) % 2 != 0) return 0;
  std::unordered_map<VertexSet, std::uint64_t> memo;
  return count_within(g, s, memo);
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  return count_perfect_matchings(g, g.vertices());
}

std::uint64_t count_pm_containing(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("no edge " + to_string(e));
  return count_perfect_matchings(g, g.vertices() & ~e.ends());
}

}  // namespace mcg
