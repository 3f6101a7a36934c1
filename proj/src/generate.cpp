#include "indsieve/generate.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace indsieve {

bool GraphFilter::operator()(const Graph& g) const {
  if (min_degree > 0 && indsieve::min_degree(g) < min_degree) {
    return false;
  }
  if (regular_only && !regular_degree(g)) {
    return false;
  }
  if (triangle_free_only && !is_triangle_free(g)) {
    return false;
  }
  return true;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (((mask >> bit) & 1U) != 0) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph::from_edges(n, edges);
}

GraphStream generate_small_graphs(const ExhaustiveOptions& options) {
  const int n_min = options.n_min.value_or(options.n_max);
  if (options.n_max > 7 || n_min < 0 || n_min > options.n_max) {
    throw std::invalid_argument("exhaustive generation needs 0 <= n_min <= n_max <= 7");
  }
  struct State {
    int n;
    std::uint64_t mask = 0;
  };
  auto state = std::make_shared<State>(State{n_min});
  const int n_max = options.n_max;
  const GraphFilter filter = options.filter;
  return [state, n_max, filter]() -> std::optional<Graph> {
    while (state->n <= n_max) {
      const int pairs = state->n * (state->n - 1) / 2;
      if (state->mask >= (std::uint64_t{1} << pairs)) {
        ++state->n;
        state->mask = 0;
        continue;
      }
      Graph g = graph_from_edge_mask(state->n, state->mask++);
      if (filter(g)) {
        return g;
      }
    }
    return std::nullopt;
  };
}

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::optional<Graph> pairing_attempt(std::mt19937_64& rng, int n, int r) {
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < r; ++i) {
      points.push_back(v);
    }
  }
  for (std::size_t i = points.size(); i > 1; --i) {
    std::swap(points[i - 1], points[below(rng, i)]);
  }
  std::vector<Edge> edges;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    Vertex u = points[i];
    Vertex v = points[i + 1];
    if (u == v) {
      return std::nullopt;
    }
    auto& slot = seen[static_cast<std::size_t>(std::min(u, v)) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(std::max(u, v))];
    if (slot != 0) {
      return std::nullopt;
    }
    slot = 1;
    edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

GraphStream sample_random_graphs(const SamplingOptions& options) {
  if (options.n_min < 0 || options.n_min > options.n_max) {
    throw std::invalid_argument("sampling needs 0 <= n_min <= n_max");
  }
  if (options.model == RandomModel::RegularPairing && options.degree < 0) {
    throw std::invalid_argument("regular sampling needs a nonnegative degree");
  }
  struct State {
    std::mt19937_64 rng;
    std::size_t produced = 0;
  };
  auto state = std::make_shared<State>(State{std::mt19937_64(options.seed)});
  return [state, options]() -> std::optional<Graph> {
    if (state->produced >= options.samples) {
      return std::nullopt;
    }
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      const auto span = static_cast<std::uint64_t>(options.n_max - options.n_min + 1);
      const int n = options.n_min + static_cast<int>(below(state->rng, span));
      std::optional<Graph> g;
      if (options.model == RandomModel::UniformEdges) {
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) {
          for (int u = 0; u < v; ++u) {
            if ((state->rng() >> 63) != 0) {
              edges.push_back({u, v});
            }
          }
        }
        g = Graph::from_edges(n, edges);
      } else {
        if ((static_cast<long>(n) * options.degree) % 2 != 0 || options.degree >= std::max(n, 1)) {
          if (options.n_min == options.n_max) {
            throw std::invalid_argument("no regular graph with these parameters");
          }
          continue;
        }
        g = pairing_attempt(state->rng, n, options.degree);
      }
      if (g && options.filter(*g)) {
        ++state->produced;
        return g;
      }
    }
    throw std::runtime_error("random sampler: too many rejected draws");
  };
}

}  // namespace indsieve
