#pragma once

// Enumeration kernels over vertex subsets whose induced subgraph has no
// isolated vertex (the only subsets that carry edge coverings). The pruned,
// OpenMP-partitioned walk is the production path; the plain filtered walk
// over all C(n, k) subsets is kept as the serial reference.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "indsieve/graph.hpp"

namespace indsieve::kernels {

inline constexpr int kMaxSubsetSize = 63;

/// Below this order the parallel reductions run on the calling thread.
inline constexpr int kParallelMinOrder = 16;

struct SubsetView {
  std::span<const Vertex> vertices;      ///< ascending
  std::span<const std::uint64_t> local;  ///< local[i] bit j <=> vertices[i] ~ vertices[j]
};

/// Σ over independent A ⊆ S of (-1)^{|A|}, S a mask over local indices.
/// Returns 0 immediately once a vertex of S has no neighbor in S.
inline std::int64_t alternating_independent_sum(std::span<const std::uint64_t> local, std::uint64_t set) {
  if (set == 0) {
    return 1;
  }
  const int v = std::countr_zero(set);
  const std::uint64_t rest = set & (set - 1);
  if ((rest & local[static_cast<std::size_t>(v)]) == 0) {
    return 0;
  }
  return alternating_independent_sum(local, rest) -
         alternating_independent_sum(local, rest & ~local[static_cast<std::size_t>(v)]);
}

/// ψ of a subset given its local adjacency: (-1)^k · P(G[J]; -1).
inline std::int64_t psi_local(std::span<const std::uint64_t> local) {
  const auto k = local.size();
  const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::int64_t sum = alternating_independent_sum(local, all);
  return (k % 2 == 0) ? sum : -sum;
}

namespace detail {

template <class Visit>
struct CoveredWalk {
  const Graph& g;
  int k;
  Visit& visit;
  std::array<Vertex, kMaxSubsetSize> chosen{};
  std::array<std::uint64_t, kMaxSubsetSize> local{};

  void extend(int depth, std::uint64_t uncovered) {
    if (depth == k) {
      if (uncovered == 0) {
        visit(SubsetView{{chosen.data(), static_cast<std::size_t>(k)}, {local.data(), static_cast<std::size_t>(k)}});
      }
      return;
    }
    const int remaining_after = k - depth - 1;
    const Vertex last_allowed = g.order() - (k - depth);
    for (Vertex v = chosen[static_cast<std::size_t>(depth - 1)] + 1; v <= last_allowed; ++v) {
      // an uncovered member whose last neighbor precedes v can never be covered
      for (std::uint64_t bits = uncovered; bits != 0; bits &= bits - 1) {
        if (g.max_neighbor(chosen[static_cast<std::size_t>(std::countr_zero(bits))]) < v) {
          return;
        }
      }
      std::uint64_t hits = 0;
      for (int i = 0; i < depth; ++i) {
        if (g.adjacent(chosen[static_cast<std::size_t>(i)], v)) {
          hits |= std::uint64_t{1} << i;
        }
      }
      std::uint64_t open = uncovered & ~hits;
      if (hits == 0) {
        open |= std::uint64_t{1} << depth;
      }
      if (remaining_after == 0) {
        if (open != 0) {
          continue;
        }
      } else {
        bool feasible = true;
        for (std::uint64_t bits = open; bits != 0; bits &= bits - 1) {
          const int i = std::countr_zero(bits);
          const Vertex member = i == depth ? v : chosen[static_cast<std::size_t>(i)];
          if (g.max_neighbor(member) <= v) {
            feasible = false;
            break;
          }
        }
        if (!feasible) {
          continue;
        }
      }
      chosen[static_cast<std::size_t>(depth)] = v;
      local[static_cast<std::size_t>(depth)] = hits;
      for (std::uint64_t bits = hits; bits != 0; bits &= bits - 1) {
        local[static_cast<std::size_t>(std::countr_zero(bits))] |= std::uint64_t{1} << depth;
      }
      extend(depth + 1, open);
      for (std::uint64_t bits = hits; bits != 0; bits &= bits - 1) {
        local[static_cast<std::size_t>(std::countr_zero(bits))] &= ~(std::uint64_t{1} << depth);
      }
    }
  }
};

}  // namespace detail

/// Visits, in lexicographic order, every k-subset with smallest vertex `first`
/// whose induced subgraph has no isolated vertex. Requires 2 <= k <= 63.
template <class Visit>
void visit_covered_subsets_from(const Graph& g, int k, Vertex first, Visit&& visit) {
  if (k < 2 || k > kMaxSubsetSize || first + k > g.order() || g.max_neighbor(first) <= first) {
    return;
  }
  detail::CoveredWalk<Visit> walk{g, k, visit};
  walk.chosen[0] = first;
  walk.local[0] = 0;
  walk.extend(1, 1);
}

/// Serial reference: walks all C(n, k) subsets and filters afterwards.
template <class Visit>
void visit_covered_subsets_reference(const Graph& g, int k, Visit&& visit) {
  const int n = g.order();
  if (k < 1 || k > kMaxSubsetSize || k > n) {
    return;
  }
  std::vector<Vertex> chosen(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> local(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    chosen[static_cast<std::size_t>(i)] = i;
  }
  while (true) {
    bool covered = true;
    for (int i = 0; i < k; ++i) {
      std::uint64_t row = 0;
      for (int j = 0; j < k; ++j) {
        if (j != i && g.adjacent(chosen[static_cast<std::size_t>(i)], chosen[static_cast<std::size_t>(j)])) {
          row |= std::uint64_t{1} << j;
        }
      }
      local[static_cast<std::size_t>(i)] = row;
      covered = covered && row != 0;
    }
    if (covered) {
      visit(SubsetView{chosen, local});
    }
    int pos = k - 1;
    while (pos >= 0 && chosen[static_cast<std::size_t>(pos)] == n - k + pos) {
      --pos;
    }
    if (pos < 0) {
      return;
    }
    ++chosen[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      chosen[static_cast<std::size_t>(i)] = chosen[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

/// Parallel map-reduce over covered k-subsets, partitioned by smallest vertex.
/// Partial results are merged in vertex order, so any exact accumulator gives
/// the same answer for every thread count.
template <class Acc, class Visit, class Merge>
Acc reduce_covered_subsets(const Graph& g, int k, const Acc& zero, Visit visit, Merge merge) {
  const int n = g.order();
  std::vector<Acc> parts(static_cast<std::size_t>(n), zero);
#pragma omp parallel for schedule(dynamic, 1) if (n >= kParallelMinOrder)
  for (int first = 0; first < n; ++first) {
    Acc& acc = parts[static_cast<std::size_t>(first)];
    visit_covered_subsets_from(g, k, first, [&](const SubsetView& s) { visit(acc, s); });
  }
  Acc total = zero;
  for (const Acc& part : parts) {
    merge(total, part);
  }
  return total;
}

template <class Acc, class Visit>
Acc reduce_covered_subsets_reference(const Graph& g, int k, Acc init, Visit visit) {
  visit_covered_subsets_reference(g, k, [&](const SubsetView& s) { visit(init, s); });
  return init;
}

}  // namespace indsieve::kernels
