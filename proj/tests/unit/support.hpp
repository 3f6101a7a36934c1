#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "indsieve/graph.hpp"
#include "indsieve/named.hpp"

namespace testing {

inline indsieve::Graph make(std::string_view spec) { return indsieve::build_named(indsieve::parse_named(spec)); }

inline indsieve::Graph edges(int n, std::initializer_list<indsieve::Edge> list) {
  const std::vector<indsieve::Edge> e(list);
  return indsieve::Graph::from_edges(n, e);
}

inline std::vector<indsieve::Vertex> all_vertices(const indsieve::Graph& g) {
  std::vector<indsieve::Vertex> v(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) {
    v[static_cast<std::size_t>(i)] = i;
  }
  return v;
}

// The seven isolated-vertex-free graphs on four vertices.
inline indsieve::Graph k13() { return edges(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline indsieve::Graph k2uk2() { return edges(4, {{0, 1}, {2, 3}}); }
inline indsieve::Graph p4() { return edges(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline indsieve::Graph c4() { return edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline indsieve::Graph r42() { return edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }
inline indsieve::Graph r41() { return edges(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}}); }
inline indsieve::Graph k4() { return make("complete:4"); }

}  // namespace testing
