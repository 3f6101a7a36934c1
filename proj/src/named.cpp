#include "indsieve/named.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace indsieve {

namespace {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) {
    edges.push_back({v, v + 1});
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n == 1 || n == 2) {
    throw std::invalid_argument("cycle needs 0 or at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    edges.push_back({v, (v + 1) % n});
  }
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) {
      edges.push_back({u, v});
    }
  }
  return Graph::from_edges(a + b, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer pentagon
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    edges.push_back({i, 5 + i});                // spokes
  }
  return Graph::from_edges(10, edges);
}

// Pentagons P_h occupy 5h..5h+4, pentagrams Q_i occupy 25+5i..25+5i+4.
// Vertex j of P_h is joined to vertex (h*i + j) mod 5 of Q_i.
Graph hoffman_singleton() {
  std::vector<Edge> edges;
  auto pent = [](int h, int j) { return 5 * h + j; };
  auto gram = [](int i, int j) { return 25 + 5 * i + j; };
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      edges.push_back({pent(h, j), pent(h, (j + 1) % 5)});
      edges.push_back({gram(h, j), gram(h, (j + 2) % 5)});
      for (int i = 0; i < 5; ++i) {
        edges.push_back({pent(h, j), gram(i, (h * i + j) % 5)});
      }
    }
  }
  return Graph::from_edges(50, edges);
}

void validate_moore(const Graph& g, int order, int degree, const char* name) {
  const auto r = regular_degree(g);
  if (g.order() != order || !r || *r != degree || girth(g) != 5 || diameter(g) != 2) {
    throw std::logic_error(std::string(name) + " construction failed validation");
  }
}

Graph krr_copies(int k, int r) {
  if (k < 0 || r < 1) {
    throw std::invalid_argument("krr-copies needs k >= 0 and r >= 1");
  }
  Graph out(0);
  const Graph block = complete_bipartite(r, r);
  for (int i = 0; i < k; ++i) {
    out = disjoint_union(out, block);
  }
  return out;
}

void require_nonnegative(int value) {
  if (value < 0) {
    throw std::invalid_argument("named graph parameters must be nonnegative");
  }
}

struct Builder {
  Graph operator()(const named::Empty& s) const {
    require_nonnegative(s.n);
    return Graph(s.n);
  }
  Graph operator()(const named::Complete& s) const {
    require_nonnegative(s.n);
    return complete_graph(s.n);
  }
  Graph operator()(const named::Path& s) const {
    require_nonnegative(s.n);
    return path_graph(s.n);
  }
  Graph operator()(const named::Cycle& s) const {
    require_nonnegative(s.n);
    return cycle_graph(s.n);
  }
  Graph operator()(const named::CompleteBipartite& s) const {
    require_nonnegative(s.a);
    require_nonnegative(s.b);
    return complete_bipartite(s.a, s.b);
  }
  Graph operator()(const named::Petersen&) const {
    Graph g = petersen();
    validate_moore(g, 10, 3, "Petersen");
    return g;
  }
  Graph operator()(const named::HoffmanSingleton&) const {
    Graph g = hoffman_singleton();
    validate_moore(g, 50, 7, "Hoffman-Singleton");
    return g;
  }
  Graph operator()(const named::DisjointUnion& s) const {
    Graph out(0);
    for (const NamedGraph& part : s.parts) {
      out = disjoint_union(out, build_named(part));
    }
    return out;
  }
  Graph operator()(const named::KRRCopies& s) const { return krr_copies(s.k, s.r); }
};

std::vector<int> parse_ints(std::string_view text, std::size_t expected, std::string_view whole) {
  std::vector<int> values;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("bad parameter in named graph '" + std::string(whole) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  if (values.size() != expected) {
    throw std::invalid_argument("wrong parameter count in named graph '" + std::string(whole) + "'");
  }
  for (int v : values) {
    require_nonnegative(v);
  }
  return values;
}

NamedGraph parse_single(std::string_view text) {
  if (text == "petersen") {
    return {named::Petersen{}};
  }
  if (text == "hoffman-singleton") {
    return {named::HoffmanSingleton{}};
  }
  if (text.size() == 3 && text[0] == 'k' && std::isdigit(static_cast<unsigned char>(text[1])) != 0 &&
      std::isdigit(static_cast<unsigned char>(text[2])) != 0) {
    return {named::CompleteBipartite{text[1] - '0', text[2] - '0'}};
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("unknown named graph '" + std::string(text) + "'");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  if (name == "empty") {
    return {named::Empty{parse_ints(args, 1, text)[0]}};
  }
  if (name == "complete") {
    return {named::Complete{parse_ints(args, 1, text)[0]}};
  }
  if (name == "path") {
    return {named::Path{parse_ints(args, 1, text)[0]}};
  }
  if (name == "cycle") {
    return {named::Cycle{parse_ints(args, 1, text)[0]}};
  }
  if (name == "kbip") {
    const auto v = parse_ints(args, 2, text);
    return {named::CompleteBipartite{v[0], v[1]}};
  }
  if (name == "krr-copies") {
    const auto v = parse_ints(args, 2, text);
    return {named::KRRCopies{v[0], v[1]}};
  }
  throw std::invalid_argument("unknown named graph '" + std::string(text) + "'");
}

struct Describer {
  std::string operator()(const named::Empty& s) const { return "empty:" + std::to_string(s.n); }
  std::string operator()(const named::Complete& s) const { return "complete:" + std::to_string(s.n); }
  std::string operator()(const named::Path& s) const { return "path:" + std::to_string(s.n); }
  std::string operator()(const named::Cycle& s) const { return "cycle:" + std::to_string(s.n); }
  std::string operator()(const named::CompleteBipartite& s) const {
    return "kbip:" + std::to_string(s.a) + "," + std::to_string(s.b);
  }
  std::string operator()(const named::Petersen&) const { return "petersen"; }
  std::string operator()(const named::HoffmanSingleton&) const { return "hoffman-singleton"; }
  std::string operator()(const named::DisjointUnion& s) const {
    std::string out;
    for (const NamedGraph& part : s.parts) {
      out += (out.empty() ? "" : "+") + describe(part);
    }
    return out;
  }
  std::string operator()(const named::KRRCopies& s) const {
    return "krr-copies:" + std::to_string(s.k) + "," + std::to_string(s.r);
  }
};

}  // namespace

Graph build_named(const NamedGraph& spec) { return std::visit(Builder{}, spec.kind); }

NamedGraph parse_named(std::string_view text) {
  if (text.find('+') == std::string_view::npos) {
    return parse_single(text);
  }
  named::DisjointUnion un;
  while (true) {
    const auto plus = text.find('+');
    un.parts.push_back(parse_single(text.substr(0, plus)));
    if (plus == std::string_view::npos) {
      break;
    }
    text.remove_prefix(plus + 1);
  }
  return {std::move(un)};
}

std::string describe(const NamedGraph& spec) { return std::visit(Describer{}, spec.kind); }

}  // namespace indsieve
