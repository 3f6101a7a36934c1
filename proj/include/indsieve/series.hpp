#pragma once

#include <span>
#include <vector>

#include "indsieve/exact.hpp"
#include "indsieve/graph.hpp"

namespace indsieve {

/// Σ_{k <= order} c_k x^k + O(x^{order+1}) with exact rational coefficients,
/// always kept in lowest terms.
class RationalSeries {
 public:
  /// The zero series.
  explicit RationalSeries(int order);

  /// Coefficients beyond `order` are dropped, missing ones are zero.
  RationalSeries(int order, std::vector<Rational> coefficients);

  static RationalSeries from_integers(int order, std::span<const BigInt> coefficients);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool operator==(const RationalSeries& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Throws std::invalid_argument on order mismatch.
RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);

/// a^k for k >= 0 by repeated squaring.
RationalSeries series_int_pow(const RationalSeries& a, long k);

/// a^α for a with constant term 1, from a·P' = α·a'·P:
///   k·p_k = Σ_{j=1..k} (α·j − (k − j))·a_j·p_{k−j}.
/// Throws std::invalid_argument when a[0] != 1.
RationalSeries series_rational_pow(const RationalSeries& a, const Rational& alpha);

/// 2(1 + x)^r − 1 truncated at `order`.
RationalSeries bipartite_block_series(int r, int order);

/// [x^t] (2(1 + x)^r − 1)^{n/(2r)}; r >= 1, n >= 1, t >= 0.
Rational kahn_bound_coefficient(long n, int r, int t);

/// P(G; x) truncated at `order`.
RationalSeries independence_series(const Graph& g, int order);

}  // namespace indsieve
