#include <stdexcept>

#include "mcg/structure.hpp"

namespace mcg {

bool is_matching_covered(const Graph& g) {
  const int n = g.order();
  if (n < 2 || n % 2 != 0 || !is_connected(g)) return false;
  Matchability oracle(g);
  for (const Edge& e : g.edges())
    if (!oracle.perfectly_matchable(g.vertices() & ~e.ends())) return false;
  return true;
}

PerfectMatchingList::PerfectMatchingList(const Graph& g) : width_(g.order() / 2) {
  for_each_perfect_matching(g, [&](const Matching& m) {
    for (const Edge& e : m.edges()) pairs_.push_back(e.ends());
    ++count_;
  });
}

bool PerfectMatchingList::crosses_once(VertexSet x) const {
  for (std::size_t i = 0; i < count_; ++i) {
    int crossing = 0;
    const VertexSet* pm = pairs_.data() + i * width_;
    for (std::size_t k = 0; k < width_; ++k)
      if (cardinality(pm[k] & x) == 1 && ++crossing > 1) return false;
    if (crossing != 1) return false;
  }
  return true;
}

std::uint64_t PerfectMatchingList::containing(const Edge& e) const {
  const VertexSet target = e.ends();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < count_; ++i) {
    const VertexSet* pm = pairs_.data() + i * width_;
    for (std::size_t k = 0; k < width_; ++k)
      if (pm[k] == target) {
        ++total;
        break;
      }
  }
  return total;
}

bool is_tight_cut(const Graph& g, const Shore& x) {
  if ((x.members & ~g.vertices()) != 0 || x.size() < 1 || x.size() > g.order() - 1)
    throw std::invalid_argument("shore must satisfy 1 <= |X| <= n-1");
  return PerfectMatchingList(g).crosses_once(x.members);
}

namespace {

template <typename Visit>
void scan_nontrivial_tight_cuts(const Graph& g, Visit&& visit) {
  const int n = g.order();
  if (n < 6) return;  // a nontrivial odd shore needs 3 <= |X| <= n-3
  const PerfectMatchingList pms(g);
  const VertexSet limit = singleton(n - 1);
  for (VertexSet x = 1; x < limit; ++x) {
    int k = cardinality(x);
    if (k % 2 == 0 || k < 3 || k > n - 3) continue;
    if (pms.crosses_once(x) && !visit(Shore{x})) return;
  }
}

}  // namespace

std::vector<Shore> nontrivial_tight_cuts(const Graph& g) {
  std::vector<Shore> out;
  scan_nontrivial_tight_cuts(g, [&](const Shore& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::optional<Shore> find_nontrivial_tight_cut(const Graph& g) {
  std::optional<Shore> out;
  scan_nontrivial_tight_cuts(g, [&](const Shore& s) {
    out = s;
    return false;
  });
  return out;
}

}  // namespace mcg
