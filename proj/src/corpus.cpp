#include "mcg/corpus.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>

#include <zlib.h>

#include "mcg/graph6.hpp"
#include "mcg/graph_ops.hpp"
#include "mcg/isomorphism.hpp"
#include "mcg/structure.hpp"

namespace mcg {

namespace {

constexpr std::array<std::pair<Filter, std::string_view>, 7> kFilterNames{{
    {Filter::kEvenOrder, "even-order"},
    {Filter::kConnected, "connected"},
    {Filter::kMinDegree3, "min-degree-3"},
    {Filter::kThreeConnected, "3-connected"},
    {Filter::kMatchingCovered, "matching-covered"},
    {Filter::kBrick, "brick"},
    {Filter::kSolid, "solid"},
}};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view filter_name(Filter f) {
  for (const auto& [filter, name] : kFilterNames)
    if (filter == f) return name;
  return "unknown";
}

std::optional<Filter> parse_filter(std::string_view name) {
  for (const auto& [filter, known] : kFilterNames)
    if (known == name) return filter;
  return std::nullopt;
}

bool passes(Filter f, const Graph& g) {
  switch (f) {
    case Filter::kEvenOrder: return g.order() % 2 == 0;
    case Filter::kConnected: return is_connected(g);
    case Filter::kMinDegree3: return g.order() > 0 && g.min_degree() >= 3;
    case Filter::kThreeConnected: return is_k_connected(g, 3);
    case Filter::kMatchingCovered: return is_matching_covered(g);
    case Filter::kBrick: return is_brick(g);
    case Filter::kSolid: return is_brick(g) && is_solid(g);
  }
  return false;
}

std::string CorpusSource::describe() const {
  std::string out = std::visit(
      Overloaded{
          [](const FileOrigin& f) { return "graph6 file " + (f.path == "-" ? "<stdin>" : f.path); },
          [](const BuiltinOrigin& b) {
            return "builtin enumeration, orders " + std::to_string(b.min_order) + ".." +
                   std::to_string(b.max_order);
          },
          [](const FamilyOrigin& f) {
            std::string s = "families";
            for (std::size_t i = 0; i < f.members.size(); ++i) {
              s += i == 0 ? " " : ", ";
              s += family_name(f.members[i].family);
              if (!family_has_fixed_order(f.members[i].family))
                s += "(" + std::to_string(f.members[i].order) + ")";
            }
            return s;
          },
          [](const ListOrigin& l) { return l.label; },
          [](const RandomOrigin& r) {
            return std::to_string(r.count) + " random matching covered graphs, order <= " +
                   std::to_string(r.max_order) + ", seed " + std::to_string(r.seed);
          },
      },
      origin);
  if (!filters.empty()) {
    out += "; filters:";
    for (Filter f : filters) out += " " + std::string(filter_name(f));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool has_gzip_suffix(const std::string& path) {
  return path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

std::unique_ptr<std::istream> open_corpus_file(const std::string& path) {
  if (!has_gzip_suffix(path)) {
    auto file = std::make_unique<std::ifstream>(path);
    if (!*file) throw CorpusError(0, "cannot open " + path);
    return file;
  }
  gzFile gz = gzopen(path.c_str(), "rb");
  if (gz == nullptr) throw CorpusError(0, "cannot open " + path);
  std::string text;
  std::array<char, 1 << 16> buffer;
  int got = 0;
  while ((got = gzread(gz, buffer.data(), buffer.size())) > 0) text.append(buffer.data(), got);
  const bool failed = got < 0;
  gzclose(gz);
  if (failed) throw CorpusError(0, "corrupt gzip stream in " + path);
  return std::make_unique<std::istringstream>(std::move(text));
}

}  // namespace

CorpusReader::CorpusReader(CorpusSource source) : source_(std::move(source)) {
  stages_.push_back({"input", 0});
  for (Filter f : source_.filters) stages_.push_back({std::string(filter_name(f)), 0});
  std::visit(Overloaded{
                 [&](const FileOrigin& f) {
                   if (f.path == "-") {
                     in_ = &std::cin;
                   } else {
                     file_ = open_corpus_file(f.path);
                     in_ = file_.get();
                   }
                 },
                 [&](const BuiltinOrigin& b) {
                   if (b.max_order > kBuiltinMaxOrder)
                     throw CorpusError(0, "builtin enumeration is capped at order " +
                                              std::to_string(kBuiltinMaxOrder));
                   if (b.min_order < 1 || b.min_order > b.max_order)
                     throw CorpusError(0, "builtin enumeration needs 1 <= min order <= max order");
                   for (int n = b.min_order; n <= b.max_order; ++n)
                     for (const Graph& g : enumerate_graphs(n)) pending_.push_back(g);
                 },
                 [&](const FamilyOrigin& f) {
                   try {
                     for (const FamilySpec& spec : f.members) pending_.push_back(generate(spec));
                   } catch (const std::invalid_argument& e) {
                     throw CorpusError(0, e.what());
                   }
                 },
                 [&](const ListOrigin& l) { pending_ = l.graphs; },
                 [&](const RandomOrigin& r) { pending_ = random_matching_covered_graphs(r); },
             },
             source_.origin);
}

CorpusReader::~CorpusReader() = default;

std::optional<Graph> CorpusReader::next_raw() {
  if (in_ == nullptr) {
    if (cursor_ >= pending_.size()) return std::nullopt;
    return pending_[cursor_++];
  }
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line == kGraph6Header) continue;
    try {
      return parse_graph6(line);
    } catch (const Graph6Error& e) {
      throw CorpusError(line_, e.what());
    }
  }
  if (in_->bad()) throw CorpusError(line_, "read error");
  return std::nullopt;
}

std::optional<Graph> CorpusReader::next() {
  while (std::optional<Graph> g = next_raw()) {
    ++stages_[0].count;
    bool kept = true;
    for (std::size_t i = 0; i < source_.filters.size() && kept; ++i) {
      kept = passes(source_.filters[i], *g);
      if (kept) ++stages_[i + 1].count;
    }
    if (kept) return g;
  }
  return std::nullopt;
}

std::vector<Graph> ingest(const CorpusSource& source, std::vector<StageCount>* stages) {
  CorpusReader reader(source);
  std::vector<Graph> out;
  while (std::optional<Graph> g = reader.next()) out.push_back(std::move(*g));
  if (stages != nullptr) *stages = reader.stage_counts();
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<Graph>& enumerate_graphs(int order) {
  if (order < 0 || order > kBuiltinMaxOrder)
    throw std::invalid_argument("builtin enumeration supports orders 0.." +
                                std::to_string(kBuiltinMaxOrder));
  static std::mutex guard;
  static std::vector<std::vector<Graph>> levels;
  std::lock_guard lock(guard);
  if (levels.empty()) levels.push_back({Graph(0)});
  // Every graph arises from one of order n-1 by adding a vertex of minimum
  // degree, so only such extensions are generated.
  while (static_cast<int>(levels.size()) <= order) {
    const int n = static_cast<int>(levels.size());
    IsomorphismClasses classes;
    for (const Graph& base : levels.back()) {
      for (VertexSet nbrs = 0; nbrs < singleton(n - 1); ++nbrs) {
        const int d = cardinality(nbrs);
        bool minimal = true;
        for (Vertex v = 0; v < n - 1 && minimal; ++v)
          minimal = base.degree(v) + (contains(nbrs, v) ? 1 : 0) >= d;
        if (!minimal) continue;
        Graph g(n);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (Vertex v : members(nbrs)) g.add_edge(v, n - 1);
        classes.insert(g);
      }
    }
    levels.push_back(classes.representatives());
  }
  return levels[order];
}

Graph splice(const Graph& g1, Vertex x, const Graph& g2, Vertex y) {
  if (g1.degree(x) != g2.degree(y))
    throw std::invalid_argument("splice needs vertices of equal degree");
  const int n1 = g1.order();
  const int n = n1 + g2.order() - 2;
  Graph out(n);
  auto left = [&](Vertex v) { return v < x ? v : v - 1; };
  auto right = [&](Vertex v) { return (n1 - 1) + (v < y ? v : v - 1); };
  for (const Edge& e : g1.edges())
    if (e.u != x && e.v != x) out.add_edge(left(e.u), left(e.v));
  for (const Edge& e : g2.edges())
    if (e.u != y && e.v != y) out.add_edge(right(e.u), right(e.v));
  std::vector<Vertex> a = members(g1.neighbors(x));
  std::vector<Vertex> b = members(g2.neighbors(y));
  for (std::size_t i = 0; i < a.size(); ++i) out.add_edge(left(a[i]), right(b[i]));
  return out;
}

std::vector<Graph> random_matching_covered_graphs(const RandomOrigin& spec) {
  if (spec.max_order < 4 || spec.max_order > kSupportedOrder)
    throw std::invalid_argument("random corpus order must lie in 4.." +
                                std::to_string(kSupportedOrder));
  std::vector<Graph> bases;
  for (int n = 4; n <= spec.max_order; n += 2) {
    bases.push_back(wheel(n));
    bases.push_back(cycle(n));
    if (n >= 6) {
      bases.push_back(prism(n));
      bases.push_back(moebius_ladder(n));
    }
  }
  bases.push_back(complete(4));
  if (spec.max_order >= 6) bases.push_back(complete(6));
  if (spec.max_order >= 10) bases.push_back(petersen());

  std::mt19937_64 rng(spec.seed);
  auto uniform = [&](std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi - 1)(rng);
  };
  std::vector<Graph> out;
  const std::size_t attempts = spec.count * 1000 + 1000;
  for (std::size_t attempt = 0; attempt < attempts && out.size() < spec.count; ++attempt) {
    Graph g = bases[uniform(bases.size())];
    if (uniform(2) == 0) {
      // Splice with a second base at vertices of equal degree.
      const Graph& other = bases[uniform(bases.size())];
      if (g.order() + other.order() - 2 > spec.max_order) continue;
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = 0; y < other.order(); ++y)
          if (g.degree(x) == other.degree(y)) pairs.emplace_back(x, y);
      if (pairs.empty()) continue;
      auto [x, y] = pairs[uniform(pairs.size())];
      g = splice(g, x, other, y);
    }
    const std::size_t toggles = uniform(4);
    for (std::size_t t = 0; t < toggles; ++t) {
      Vertex a = static_cast<Vertex>(uniform(g.order()));
      Vertex b = static_cast<Vertex>(uniform(g.order()));
      if (a == b) continue;
      if (g.has_edge(a, b))
        g.remove_edge(a, b);
      else
        g.add_edge(a, b);
    }
    if (!is_matching_covered(g)) continue;
    std::vector<Vertex> perm(g.order());
    for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph relabeled(g.order());
    for (const Edge& e : g.edges()) relabeled.add_edge(perm[e.u], perm[e.v]);
    out.push_back(std::move(relabeled));
  }
  if (out.size() < spec.count)
    throw std::runtime_error("random corpus generation ran out of attempts");
  return out;
}

}  // namespace mcg
