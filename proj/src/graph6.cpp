#include "mcg/graph6.hpp"

namespace mcg {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw Graph6Error(pos, "record truncated");
  int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kMaxByte)
    throw Graph6Error(pos, "character code " + std::to_string(c) + " outside 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(0, "empty record");

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) != kMaxByte) {
    n = sextet(text, 0);
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kMaxByte) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i);
    pos = 8;
    if (n < 258048) throw Graph6Error(0, "non-canonical 8-byte order prefix");
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, i);
    pos = 4;
    if (n < 63) throw Graph6Error(0, "non-canonical 4-byte order prefix");
  }
  if (n > kMaxOrder)
    throw Graph6Error(0, "order " + std::to_string(n) + " exceeds supported maximum " +
                             std::to_string(kMaxOrder));

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw Graph6Error(text.size(), "record truncated");
  if (text.size() > pos + body) throw Graph6Error(pos + body, "trailing characters");

  Graph g(order);
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int chunk = sextet(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = sextet(text, pos + body - 1);
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
      throw Graph6Error(pos + body - 1, "nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace mcg
