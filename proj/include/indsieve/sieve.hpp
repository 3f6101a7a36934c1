#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "indsieve/exact.hpp"
#include "indsieve/graph.hpp"

namespace indsieve {

/// Signed edge-cover count ψ(J) = (#even covers) − (#odd covers) of G[J].
/// The cover counts are filled in only by the edge-subset enumeration path.
struct PsiValue {
  std::int64_t value = 0;
  std::optional<std::uint64_t> even_covers;
  std::optional<std::uint64_t> odd_covers;
};

/// ψ(J) via the alternating independent-set sum (−1)^{|J|}·P(G[J]; −1).
/// Short-circuits to 0 when G[J] has an isolated vertex. |J| <= 63.
PsiValue psi(const Graph& g, std::span<const Vertex> subset);

/// Sieve coefficients N_0..N_{t_max}: N_0 = 1, N_j = Σ_{|J| = j} ψ(J).
struct SieveTable {
  int n = 0;
  int t_max = 0;
  std::vector<BigInt> coefficients;

  const BigInt& operator[](int j) const { return coefficients[static_cast<std::size_t>(j)]; }
};

/// Orders up to this size use the whole-lattice recurrence over all 2^n subsets.
inline constexpr int kLatticeMaxOrder = 16;

/// Requires 0 <= t_max <= n. Small graphs go through the subset lattice,
/// larger ones through the parallel pruned enumeration of covered subsets.
SieveTable sieve_coefficients(const Graph& g, int t_max);

/// Serial reference: every j-subset is visited and filtered (no pruning, no lattice).
SieveTable sieve_coefficients_reference(const Graph& g, int t_max);

/// Parallel enumeration path regardless of order (exposed for cross-checks).
SieveTable sieve_coefficients_enumerated(const Graph& g, int t_max);

/// Lattice path regardless of t_max; n <= 24.
SieveTable sieve_coefficients_lattice(const Graph& g, int t_max);

/// i_t = Σ_{j <= t} C(n − j, t − j) N_j using an existing table (t <= table.t_max
/// or t > n).
BigInt count_from_sieve(const SieveTable& table, int t);

/// i_t(G) through the sieve.
BigInt it_via_sieve(const Graph& g, int t);

/// i_0..i_n through one full sieve table.
std::vector<BigInt> independence_counts_via_sieve(const Graph& g);

}  // namespace indsieve
