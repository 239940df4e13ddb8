#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcg/graph.hpp"

namespace mcg {

/// Raised for malformed graph6 input. offset() is the zero-based byte
/// position of the first offending character within the record (after an
/// optional ">>graph6<<" header has been stripped).
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// newline (LF or CRLF) are accepted; anything else outside the record is
/// an error.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace mcg
