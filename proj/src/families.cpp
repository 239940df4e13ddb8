#include "mcg/families.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "mcg/graph_ops.hpp"

namespace mcg {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kNames{{
    {Family::kWheel, "wheel"},
    {Family::kCycle, "cycle"},
    {Family::kComplete, "complete"},
    {Family::kPrism, "prism"},
    {Family::kMoebiusLadder, "moebius-ladder"},
    {Family::kPetersen, "petersen"},
    {Family::kC6Complement, "c6-complement"},
}};

void require(bool ok, std::string_view family, int order, std::string_view rule) {
  if (!ok)
    throw std::invalid_argument(std::string(family) + " of order " + std::to_string(order) +
                                ": " + std::string(rule));
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames)
    if (family == f) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, known] : kNames)
    if (known == name) return family;
  return std::nullopt;
}

int family_min_order(Family f) {
  switch (f) {
    case Family::kWheel: return 4;
    case Family::kCycle: return 3;
    case Family::kComplete: return 1;
    case Family::kPrism:
    case Family::kMoebiusLadder:
    case Family::kC6Complement: return 6;
    case Family::kPetersen: return 10;
  }
  return 0;
}

bool family_has_fixed_order(Family f) {
  return f == Family::kPetersen || f == Family::kC6Complement;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kWheel: return wheel(spec.order);
    case Family::kCycle: return cycle(spec.order);
    case Family::kComplete: return complete(spec.order);
    case Family::kPrism: return prism(spec.order);
    case Family::kMoebiusLadder: return moebius_ladder(spec.order);
    case Family::kPetersen: return petersen();
    case Family::kC6Complement: return c6_complement();
  }
  throw std::invalid_argument("unknown family");
}

Graph wheel(int order) {
  require(order >= 4 && order <= kMaxOrder, "wheel", order, "order must be >= 4");
  Graph g(order);
  const int rim = order - 1;
  for (int i = 0; i < rim; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 1 + (i + 1) % rim);
  }
  return g;
}

Graph cycle(int order) {
  require(order >= 3 && order <= kMaxOrder, "cycle", order, "order must be >= 3");
  Graph g(order);
  for (int i = 0; i < order; ++i) g.add_edge(i, (i + 1) % order);
  return g;
}

Graph complete(int order) {
  require(order >= 1 && order <= kMaxOrder, "complete", order, "order must be >= 1");
  Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
  return g;
}

Graph prism(int order) {
  require(order >= 6 && order % 2 == 0 && order <= kMaxOrder, "prism", order,
          "order must be even and >= 6");
  const int k = order / 2;
  Graph g(order);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

Graph moebius_ladder(int order) {
  require(order >= 6 && order % 2 == 0 && order <= kMaxOrder, "moebius-ladder", order,
          "order must be even and >= 6");
  Graph g = cycle(order);
  for (int i = 0; i < order / 2; ++i) g.add_edge(i, i + order / 2);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + i);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph c6_complement() { return complement(cycle(6)); }

}  // namespace mcg
