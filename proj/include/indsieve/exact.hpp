#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace indsieve {

using BigInt = mpz_class;
using Rational = mpq_class;

/// C(a, b) over arbitrary precision; zero when b < 0 or b > a.
BigInt binomial(long a, long b);

std::string to_string(const BigInt& value);

/// Always "p/q", including q = 1.
std::string to_fraction_string(const Rational& value);

/// Fixed-point decimal rendering with `digits` places after the point.
std::string to_decimal_string(const Rational& value, int digits = 12);

/// Prime factorization by trial division, ascending primes. |value| must be positive.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt value);

/// "2^6 * 3 * 5^2"
std::string format_factorization(const std::vector<std::pair<BigInt, unsigned>>& factors);

/// Exact signed sum that stays in 128-bit registers until it would overflow.
class ExactSum {
 public:
  void add(std::int64_t term) {
    __int128 next;
    if (__builtin_add_overflow(fast_, static_cast<__int128>(term), &next)) {
      spill();
      fast_ = term;
    } else {
      fast_ = next;
    }
  }

  void merge(const ExactSum& other);

  BigInt value() const;

 private:
  void spill();

  __int128 fast_ = 0;
  BigInt spilled_ = 0;
};

BigInt from_int128(__int128 value);

}  // namespace indsieve
