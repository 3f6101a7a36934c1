#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace indsieve {

using Vertex = int;

/// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on vertices 0..n-1.
///
/// Adjacency is kept as one bitset row per vertex (ceil(n/64) words each), so
/// membership, intersection and popcount stay word-parallel. The edge list is
/// sorted lexicographically, which makes every serialization deterministic.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops or out-of-range endpoints. Repeated
  /// pairs collapse to a single edge.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const {
    return ((adj_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] >> (v & 63)) & 1U) != 0;
  }

  /// Bitset row of N(v); word w holds vertices 64w..64w+63.
  std::span<const std::uint64_t> neighbors(Vertex v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  /// Single-word row; only meaningful when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return adj_[static_cast<std::size_t>(v) * words_]; }

  std::size_t words_per_row() const { return words_; }

  int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
  std::span<const int> degrees() const { return degree_; }
  std::span<const Edge> edges() const { return edges_; }

  /// Largest neighbor index of v, or -1 when v is isolated.
  Vertex max_neighbor(Vertex v) const { return max_neighbor_[static_cast<std::size_t>(v)]; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  std::vector<Vertex> max_neighbor_;
  std::vector<Edge> edges_;
};

struct InducedSubgraph {
  Graph graph;
  /// index_map[i] is the original vertex behind new vertex i (ascending).
  std::vector<Vertex> index_map;
};

/// G[J], reindexed to 0..|J|-1 in ascending original order. Duplicates in J are
/// ignored; out-of-range indices throw std::out_of_range.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// Vertices of `a` first, then those of `b` shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Largest pairwise distance; nullopt when disconnected. Graphs with at most one
/// vertex have diameter 0.
std::optional<int> diameter(const Graph& g);

int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// r when every vertex has degree r. The 0-vertex graph is reported as 0-regular.
std::optional<int> regular_degree(const Graph& g);

bool is_triangle_free(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// True when g is K_{a,b} for some a, b >= 1 with parts reported through the out-params.
bool is_complete_bipartite(const Graph& g, int* part_a = nullptr, int* part_b = nullptr);

}  // namespace indsieve
