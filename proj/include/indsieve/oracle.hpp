#pragma once

// Brute-force ground truth. Nothing here goes through the sieve: counts come
// from direct enumeration of vertex subsets and ψ from enumeration of edge
// subsets, so these functions can referee the fast paths.

#include <optional>
#include <span>
#include <vector>

#include "indsieve/exact.hpp"
#include "indsieve/graph.hpp"
#include "indsieve/sieve.hpp"

namespace indsieve::oracle {

/// Number of independent t-subsets; partitioned across threads by smallest vertex.
BigInt brute_force_it(const Graph& g, int t);

/// Single-threaded version of brute_force_it.
BigInt brute_force_it_serial(const Graph& g, int t);

/// Coefficients i_0, i_1, ..., i_α of P(G; x).
struct IndependencePolynomial {
  std::vector<BigInt> coefficients;

  /// i(G) = P(G; 1)
  BigInt total() const;
  int independence_number() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// P(G; x) from the deletion recurrence P(S) = P(S − v) + x·P(S − N[v]),
/// memoized on the vertex set, pivoting on a vertex of maximum degree in G[S].
/// With max_degree set the result is truncated to that degree and branches
/// that cannot reach it are cut.
IndependencePolynomial independence_polynomial(const Graph& g, std::optional<int> max_degree = std::nullopt);

inline constexpr int kBruteForcePsiEdgeLimit = 24;

/// ψ(J) by enumerating every edge subset of G[J] and keeping the covers.
/// Throws std::length_error when G[J] has more than 24 edges.
PsiValue brute_force_psi(const Graph& g, std::span<const Vertex> subset);

}  // namespace indsieve::oracle
