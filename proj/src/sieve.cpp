#include "indsieve/sieve.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "indsieve/subsets.hpp"

namespace indsieve {

PsiValue psi(const Graph& g, std::span<const Vertex> subset) {
  const std::size_t k = subset.size();
  if (k > static_cast<std::size_t>(kernels::kMaxSubsetSize)) {
    throw std::invalid_argument("psi: subsets are limited to 63 vertices");
  }
  std::vector<std::uint64_t> local(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (subset[i] < 0 || subset[i] >= g.order()) {
      throw std::out_of_range("psi: vertex " + std::to_string(subset[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (subset[i] == subset[j]) {
        throw std::invalid_argument("psi: repeated vertex " + std::to_string(subset[i]));
      }
      if (g.adjacent(subset[i], subset[j])) {
        local[i] |= std::uint64_t{1} << j;
        local[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (std::any_of(local.begin(), local.end(), [](std::uint64_t row) { return row == 0; }) && k > 0) {
    return {};
  }
  return {kernels::psi_local(local), std::nullopt, std::nullopt};
}

namespace {

void check_tmax(const Graph& g, int t_max) {
  if (t_max < 0 || t_max > g.order()) {
    throw std::invalid_argument("sieve: t_max must lie in [0, n], got " + std::to_string(t_max));
  }
}

SieveTable make_table(const Graph& g, int t_max) {
  SieveTable table;
  table.n = g.order();
  table.t_max = t_max;
  table.coefficients.assign(static_cast<std::size_t>(t_max) + 1, 0);
  table.coefficients[0] = 1;
  return table;
}

}  // namespace

SieveTable sieve_coefficients_lattice(const Graph& g, int t_max) {
  check_tmax(g, t_max);
  const int n = g.order();
  if (n > 24) {
    throw std::invalid_argument("sieve lattice path is limited to 24 vertices");
  }
  // f[S] = P(G[S]; −1) by deleting the lowest vertex v of S:
  //   f[S] = f[S − v] − f[S − N[v]].
  const std::size_t cells = std::size_t{1} << n;
  std::vector<std::int64_t> f(cells);
  std::vector<std::int64_t> sums(static_cast<std::size_t>(t_max) + 1, 0);
  f[0] = 1;
  for (std::size_t set = 1; set < cells; ++set) {
    const int v = std::countr_zero(set);
    const std::size_t rest = set & (set - 1);
    f[set] = f[rest] - f[rest & ~static_cast<std::size_t>(g.neighbor_mask(v))];
    const int size = std::popcount(set);
    if (size <= t_max) {
      sums[static_cast<std::size_t>(size)] += (size % 2 == 0) ? f[set] : -f[set];
    }
  }
  SieveTable table = make_table(g, t_max);
  for (int j = 1; j <= t_max; ++j) {
    table.coefficients[static_cast<std::size_t>(j)] = BigInt(static_cast<long>(sums[static_cast<std::size_t>(j)]));
  }
  return table;
}

SieveTable sieve_coefficients_enumerated(const Graph& g, int t_max) {
  check_tmax(g, t_max);
  if (t_max > kernels::kMaxSubsetSize) {
    throw std::invalid_argument("sieve enumeration is limited to subsets of 63 vertices");
  }
  SieveTable table = make_table(g, t_max);
  for (int j = 2; j <= t_max; ++j) {
    const ExactSum total = kernels::reduce_covered_subsets(
        g, j, ExactSum{}, [](ExactSum& acc, const kernels::SubsetView& s) { acc.add(kernels::psi_local(s.local)); },
        [](ExactSum& into, const ExactSum& part) { into.merge(part); });
    table.coefficients[static_cast<std::size_t>(j)] = total.value();
  }
  return table;
}

SieveTable sieve_coefficients_reference(const Graph& g, int t_max) {
  check_tmax(g, t_max);
  if (t_max > kernels::kMaxSubsetSize) {
    throw std::invalid_argument("sieve enumeration is limited to subsets of 63 vertices");
  }
  SieveTable table = make_table(g, t_max);
  for (int j = 1; j <= t_max; ++j) {
    const ExactSum total = kernels::reduce_covered_subsets_reference(
        g, j, ExactSum{}, [](ExactSum& acc, const kernels::SubsetView& s) { acc.add(kernels::psi_local(s.local)); });
    table.coefficients[static_cast<std::size_t>(j)] = total.value();
  }
  return table;
}

SieveTable sieve_coefficients(const Graph& g, int t_max) {
  if (g.order() <= kLatticeMaxOrder) {
    return sieve_coefficients_lattice(g, t_max);
  }
  return sieve_coefficients_enumerated(g, t_max);
}

BigInt count_from_sieve(const SieveTable& table, int t) {
  if (t < 0) {
    return 0;
  }
  const int n = table.n;
  const int top = std::min(t, n);
  if (top > table.t_max) {
    throw std::invalid_argument("count_from_sieve: table too short for t = " + std::to_string(t));
  }
  BigInt total = 0;
  for (int j = 0; j <= top; ++j) {
    total += binomial(n - j, t - j) * table[j];
  }
  return total;
}

BigInt it_via_sieve(const Graph& g, int t) {
  if (t < 0) {
    return 0;
  }
  return count_from_sieve(sieve_coefficients(g, std::min(t, g.order())), t);
}

std::vector<BigInt> independence_counts_via_sieve(const Graph& g) {
  const SieveTable table = sieve_coefficients(g, g.order());
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(g.order()) + 1);
  for (int t = 0; t <= g.order(); ++t) {
    counts.push_back(count_from_sieve(table, t));
  }
  return counts;
}

}  // namespace indsieve
