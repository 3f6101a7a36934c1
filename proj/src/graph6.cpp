#include "indsieve/graph6.hpp"

#include <vector>

namespace indsieve {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int decode_byte(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6 character out of range", pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) {
    pos = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (pos >= text.size()) {
    throw ParseError("empty graph6 string", pos);
  }
  if (text[pos] == ':' || text[pos] == ';') {
    throw ParseError("sparse6 input is not supported", pos);
  }
  if (text[pos] == '&') {
    throw ParseError("digraph6 input is not supported", pos);
  }

  long n = 0;
  if (text[pos] != '~') {
    n = decode_byte(text, pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    // 36-bit form: "~~" followed by six bytes
    if (pos + 8 > text.size()) {
      throw ParseError("truncated graph6 header", text.size());
    }
    for (std::size_t i = pos + 2; i < pos + 8; ++i) {
      n = (n << 6) | decode_byte(text, i);
    }
    if (n < 258048) {
      throw ParseError("malformed graph6 header: non-minimal 36-bit order", pos);
    }
    pos += 8;
  } else {
    if (pos + 4 > text.size()) {
      throw ParseError("truncated graph6 header", text.size());
    }
    for (std::size_t i = pos + 1; i < pos + 4; ++i) {
      n = (n << 6) | decode_byte(text, i);
    }
    if (n < 63) {
      throw ParseError("malformed graph6 header: non-minimal 18-bit order", pos);
    }
    pos += 4;
  }
  if (n > kMaxGraph6Order) {
    throw ParseError("graph order " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxGraph6Order), 0);
  }

  const auto order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) {
    throw ParseError("truncated graph6 bit vector", text.size());
  }
  if (text.size() - pos > bytes) {
    throw ParseError("trailing data after graph6 bit vector", pos + bytes);
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const std::size_t at = pos + bit / 6;
      const int value = decode_byte(text, at);
      if (((value >> (5 - bit % 6)) & 1) != 0) {
        edges.push_back({u, v});
      }
    }
  }
  // validate characters of the padding byte too
  if (bytes > 0) {
    decode_byte(text, pos + bytes - 1);
  }
  return Graph::from_edges(order, edges);
}

std::string write_graph6(const Graph& g) {
  const long n = g.order();
  if (n > kMaxGraph6Order) {
    throw std::invalid_argument("graph order exceeds graph6 writer limit");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

std::optional<Graph> Graph6Reader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line == kHeader) {
      continue;
    }
    try {
      return parse_graph6(line);
    } catch (const ParseError& e) {
      throw std::runtime_error("line " + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

}  // namespace indsieve
