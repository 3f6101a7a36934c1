#include "indsieve/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace indsieve {

namespace {

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

Graph::Graph(int n) : Graph(from_edges(n, {})) {}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) {
    throw std::invalid_argument("graph order must be nonnegative");
  }
  Graph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.adj_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  g.degree_.assign(static_cast<std::size_t>(n), 0);
  g.max_neighbor_.assign(static_cast<std::size_t>(n), -1);
  g.edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) {
      std::swap(e.u, e.v);
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adj_[static_cast<std::size_t>(e.u) * g.words_ + (static_cast<unsigned>(e.v) >> 6)] |= std::uint64_t{1} << (e.v & 63);
    g.adj_[static_cast<std::size_t>(e.v) * g.words_ + (static_cast<unsigned>(e.u) >> 6)] |= std::uint64_t{1} << (e.u & 63);
    ++g.degree_[static_cast<std::size_t>(e.u)];
    ++g.degree_[static_cast<std::size_t>(e.v)];
    g.max_neighbor_[static_cast<std::size_t>(e.u)] = std::max(g.max_neighbor_[static_cast<std::size_t>(e.u)], e.v);
    g.max_neighbor_[static_cast<std::size_t>(e.v)] = std::max(g.max_neighbor_[static_cast<std::size_t>(e.v)], e.u);
  }
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  for (Vertex v : keep) {
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
    }
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  const int k = static_cast<int>(keep.size());
  return {Graph::from_edges(k, edges), std::move(keep)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const int shift = a.order();
  for (const Edge& e : b.edges()) {
    edges.push_back({e.u + shift, e.v + shift});
  }
  return Graph::from_edges(a.order() + b.order(), edges);
}

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex root, std::vector<Vertex>* parent) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (parent != nullptr) {
    parent->assign(static_cast<std::size_t>(g.order()), -1);
  }
  std::deque<Vertex> queue{root};
  dist[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const auto row = g.neighbors(u);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          if (parent != nullptr) {
            (*parent)[static_cast<std::size_t>(v)] = u;
          }
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  // Every non-tree edge uw seen from root r closes a closed walk of length
  // dist(u) + dist(w) + 1 that contains a cycle; the minimum over all roots is exact.
  std::optional<int> best;
  std::vector<Vertex> parent;
  for (Vertex root = 0; root < g.order(); ++root) {
    const auto dist = bfs_distances(g, root, &parent);
    for (const Edge& e : g.edges()) {
      const int du = dist[static_cast<std::size_t>(e.u)];
      const int dv = dist[static_cast<std::size_t>(e.v)];
      if (du < 0 || dv < 0) {
        continue;
      }
      if (parent[static_cast<std::size_t>(e.u)] == e.v || parent[static_cast<std::size_t>(e.v)] == e.u) {
        continue;
      }
      const int length = du + dv + 1;
      if (!best || length < *best) {
        best = length;
      }
    }
  }
  return best;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex root = 0; root < g.order(); ++root) {
    const auto dist = bfs_distances(g, root, nullptr);
    for (int d : dist) {
      if (d < 0) {
        return std::nullopt;
      }
      best = std::max(best, d);
    }
  }
  return best;
}

int min_degree(const Graph& g) {
  const auto deg = g.degrees();
  return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

int max_degree(const Graph& g) {
  const auto deg = g.degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::optional<int> regular_degree(const Graph& g) {
  const int lo = min_degree(g);
  if (lo != max_degree(g)) {
    return std::nullopt;
  }
  return lo;
}

bool is_triangle_free(const Graph& g) {
  const std::size_t words = g.words_per_row();
  for (const Edge& e : g.edges()) {
    const auto a = g.neighbors(e.u);
    const auto b = g.neighbors(e.v);
    for (std::size_t w = 0; w < words; ++w) {
      if ((a[w] & b[w]) != 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> result;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) {
      continue;
    }
    const auto dist = bfs_distances(g, root, nullptr);
    std::vector<Vertex> part;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[static_cast<std::size_t>(v)] >= 0) {
        part.push_back(v);
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
    result.push_back(std::move(part));
  }
  return result;
}

bool is_complete_bipartite(const Graph& g, int* part_a, int* part_b) {
  if (g.order() < 2 || g.size() == 0) {
    return false;
  }
  // Side of vertex 0 is its non-neighborhood; K_{a,b} means both sides are
  // independent and every cross pair is an edge.
  std::vector<int> side(static_cast<std::size_t>(g.order()));
  int a = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    side[static_cast<std::size_t>(v)] = (v == 0 || !g.adjacent(0, v)) ? 0 : 1;
    a += side[static_cast<std::size_t>(v)] == 0 ? 1 : 0;
  }
  const int b = g.order() - a;
  if (b == 0) {
    return false;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool cross = side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)];
      if (cross != g.adjacent(u, v)) {
        return false;
      }
    }
  }
  if (part_a != nullptr) {
    *part_a = a;
  }
  if (part_b != nullptr) {
    *part_b = b;
  }
  return true;
}

}  // namespace indsieve
