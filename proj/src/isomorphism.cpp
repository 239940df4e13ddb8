#include "mcg/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace mcg {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
  return mix(seed ^ (value + 0x632be59bd9b4e019ULL + (seed << 6) + (seed >> 2)));
}

std::size_t distinct(std::vector<std::uint64_t> colors) {
  std::sort(colors.begin(), colors.end());
  return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

}  // namespace

std::vector<std::uint64_t> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> colors(n);
  for (Vertex v = 0; v < n; ++v) colors[v] = mix(static_cast<std::uint64_t>(g.degree(v)));
  std::size_t classes = distinct(colors);
  std::vector<std::uint64_t> around;
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      around.clear();
      for (Vertex w : members(g.neighbors(v))) around.push_back(colors[w]);
      std::sort(around.begin(), around.end());
      std::uint64_t h = mix(colors[v]);
      for (std::uint64_t c : around) h = combine(h, c);
      next[v] = h;
    }
    colors = std::move(next);
    std::size_t now = distinct(colors);
    if (now == classes) break;
    classes = now;
  }
  return colors;
}

std::uint64_t invariant_hash(const Graph& g) {
  std::vector<std::uint64_t> colors = refined_colors(g);
  std::sort(colors.begin(), colors.end());
  std::uint64_t h = combine(mix(static_cast<std::uint64_t>(g.order())),
                            static_cast<std::uint64_t>(g.size()));
  for (std::uint64_t c : colors) h = combine(h, c);
  return h;
}

namespace {

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<std::uint64_t> gcolor;
  std::vector<std::uint64_t> hcolor;
  std::vector<Vertex> order;  // g-vertices in assignment order
  std::vector<Vertex> image;  // g-vertex -> h-vertex, -1 if unassigned
  VertexSet used = 0;         // h-vertices already taken

  bool consistent(Vertex v, Vertex w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex u = order[i];
      if (g.has_edge(u, v) != h.has_edge(image[u], w)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    Vertex v = order[depth];
    for (Vertex w = 0; w < h.order(); ++w) {
      if (contains(used, w) || hcolor[w] != gcolor[v]) continue;
      if (!consistent(v, w, depth)) continue;
      image[v] = w;
      used |= singleton(w);
      if (extend(depth + 1)) return true;
      used &= ~singleton(w);
      image[v] = -1;
    }
    return false;
  }
};

// Assignment order: rarest colour class first, then grow along edges so
// that adjacency constraints bite early.
std::vector<Vertex> assignment_order(const Graph& g, const std::vector<std::uint64_t>& colors) {
  const int n = g.order();
  std::unordered_map<std::uint64_t, int> class_size;
  for (std::uint64_t c : colors) ++class_size[c];
  std::vector<Vertex> out;
  VertexSet placed = 0;
  while (static_cast<int>(out.size()) < n) {
    Vertex best = -1;
    auto better = [&](Vertex a, Vertex b) {
      if (b < 0) return true;
      int ca = cardinality(g.neighbors(a) & placed);
      int cb = cardinality(g.neighbors(b) & placed);
      if (ca != cb) return ca > cb;
      if (class_size[colors[a]] != class_size[colors[b]])
        return class_size[colors[a]] < class_size[colors[b]];
      return a < b;
    };
    for (Vertex v = 0; v < n; ++v)
      if (!contains(placed, v) && better(v, best)) best = v;
    out.push_back(best);
    placed |= singleton(best);
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  Matcher m{g, h, refined_colors(g), refined_colors(h), {}, {}, 0};
  {
    std::vector<std::uint64_t> a = m.gcolor;
    std::vector<std::uint64_t> b = m.hcolor;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  m.order = assignment_order(g, m.gcolor);
  m.image.assign(g.order(), -1);
  if (!m.extend(0)) return std::nullopt;
  return m.image;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

bool IsomorphismClasses::insert(const Graph& g) {
  std::uint64_t key = invariant_hash(g);
  if (find(g, key)) return false;
  buckets_[key].push_back(reps_.size());
  reps_.push_back(g);
  return true;
}

std::optional<std::size_t> IsomorphismClasses::find(const Graph& g) const {
  return find(g, invariant_hash(g));
}

std::optional<std::size_t> IsomorphismClasses::find(const Graph& g, std::uint64_t key) const {
  auto it = buckets_.find(key);
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t index : it->second)
    if (are_isomorphic(g, reps_[index])) return index;
  return std::nullopt;
}

}  // namespace mcg
