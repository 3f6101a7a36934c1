#include "indsieve/series.hpp"

#include <stdexcept>
#include <string>

#include "indsieve/oracle.hpp"

namespace indsieve {

RationalSeries::RationalSeries(int order) {
  if (order < 0) {
    throw std::invalid_argument("series order must be nonnegative");
  }
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

RationalSeries::RationalSeries(int order, std::vector<Rational> coefficients) : RationalSeries(order) {
  for (std::size_t k = 0; k < coefficients.size() && k < coeffs_.size(); ++k) {
    coeffs_[k] = std::move(coefficients[k]);
    coeffs_[k].canonicalize();
  }
}

RationalSeries RationalSeries::from_integers(int order, std::span<const BigInt> coefficients) {
  std::vector<Rational> values;
  values.reserve(coefficients.size());
  for (const BigInt& c : coefficients) {
    values.emplace_back(c);
  }
  return RationalSeries(order, std::move(values));
}

namespace {

void require_same_order(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

}  // namespace

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  require_same_order(a, b);
  std::vector<Rational> out(static_cast<std::size_t>(a.order()) + 1);
  for (int k = 0; k <= a.order(); ++k) {
    out[static_cast<std::size_t>(k)] = a[k] + b[k];
  }
  return RationalSeries(a.order(), std::move(out));
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  require_same_order(a, b);
  const int order = a.order();
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (int j = 0; i + j <= order; ++j) {
      out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return RationalSeries(order, std::move(out));
}

RationalSeries series_int_pow(const RationalSeries& a, long k) {
  if (k < 0) {
    throw std::invalid_argument("series_int_pow: exponent must be nonnegative");
  }
  RationalSeries result(a.order(), {Rational(1)});
  RationalSeries base = a;
  while (k > 0) {
    if ((k & 1) != 0) {
      result = series_mul(result, base);
    }
    k >>= 1;
    if (k > 0) {
      base = series_mul(base, base);
    }
  }
  return result;
}

RationalSeries series_rational_pow(const RationalSeries& a, const Rational& alpha) {
  if (a[0] != 1) {
    throw std::invalid_argument("series_rational_pow: constant term must be 1");
  }
  const int order = a.order();
  std::vector<Rational> p(static_cast<std::size_t>(order) + 1, Rational(0));
  p[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Rational sum = 0;
    for (int j = 1; j <= k; ++j) {
      if (a[j] == 0) {
        continue;
      }
      sum += (alpha * j - (k - j)) * a[j] * p[static_cast<std::size_t>(k - j)];
    }
    p[static_cast<std::size_t>(k)] = sum / k;
  }
  return RationalSeries(order, std::move(p));
}

RationalSeries bipartite_block_series(int r, int order) {
  if (r < 0) {
    throw std::invalid_argument("bipartite_block_series: r must be nonnegative");
  }
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int k = 0; k <= order && k <= r; ++k) {
    c[static_cast<std::size_t>(k)] = Rational(2 * binomial(r, k));
  }
  c[0] -= 1;
  return RationalSeries(order, std::move(c));
}

Rational kahn_bound_coefficient(long n, int r, int t) {
  if (r < 1 || n < 1 || t < 0) {
    throw std::invalid_argument("kahn_bound_coefficient needs r >= 1, n >= 1, t >= 0");
  }
  Rational alpha(BigInt(n), BigInt(2L * r));
  alpha.canonicalize();
  return series_rational_pow(bipartite_block_series(r, t), alpha)[t];
}

RationalSeries independence_series(const Graph& g, int order) {
  const auto poly = oracle::independence_polynomial(g, order);
  return RationalSeries::from_integers(order, poly.coefficients);
}

}  // namespace indsieve
