#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "indsieve/graph.hpp"

namespace indsieve {

/// Largest order accepted by the graph6 reader and writer.
inline constexpr int kMaxGraph6Order = 16384;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// CR/LF are stripped; offsets in errors refer to the original text.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

/// Line-oriented graph6 reader. Blank lines are skipped; errors are rethrown
/// as std::runtime_error carrying the 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(&in) {}

  std::optional<Graph> next();

  std::size_t line_number() const { return line_; }

 private:
  std::istream* in_;
  std::size_t line_ = 0;
};

}  // namespace indsieve
