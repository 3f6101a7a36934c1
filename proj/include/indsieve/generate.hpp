#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "indsieve/graph.hpp"

namespace indsieve {

/// Pull-style graph stream; returns nullopt once exhausted.
using GraphStream = std::function<std::optional<Graph>()>;

struct GraphFilter {
  bool regular_only = false;
  int min_degree = 0;
  bool triangle_free_only = false;

  bool operator()(const Graph& g) const;
};

/// Exhaustive labeled enumeration: every graph on n vertices for n in
/// [n_min, n_max], one per edge subset of K_n, in order of n then edge mask.
/// With n_min defaulted to n_max only graphs of order exactly n_max appear.
/// Orders above 7 are rejected (2^21 graphs at n = 7).
struct ExhaustiveOptions {
  int n_max = 0;
  std::optional<int> n_min;
  GraphFilter filter;
};

GraphStream generate_small_graphs(const ExhaustiveOptions& options);

/// Builds the graph on n <= 11 vertices whose edge j (in the order
/// (0,1), (0,2), (1,2), (0,3), ...) is present iff bit j of mask is set.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

enum class RandomModel { UniformEdges, RegularPairing };

struct SamplingOptions {
  int n_min = 1;
  int n_max = 1;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  RandomModel model = RandomModel::UniformEdges;
  int degree = 3;  ///< RegularPairing only
  GraphFilter filter;
};

/// Seeded sampler. UniformEdges keeps each pair with probability 1/2;
/// RegularPairing draws configuration-model matchings and rejects loops and
/// multi-edges. Only mt19937_64 output is consumed directly, so streams are
/// identical across platforms for a fixed seed.
GraphStream sample_random_graphs(const SamplingOptions& options);

}  // namespace indsieve
