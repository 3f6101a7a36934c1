#include "indsieve/exact.hpp"

#include <stdexcept>

namespace indsieve {

BigInt binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) {
    return 0;
  }
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return result;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  // round half up on the last digit
  BigInt scaled = (magnitude.get_num() * scale * 2 + magnitude.get_den()) / (magnitude.get_den() * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string frac_text = frac.get_str();
  if (static_cast<int>(frac_text.size()) < digits) {
    frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  }
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    out += "." + frac_text;
  }
  return out;
}

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt value) {
  if (value <= 0) {
    throw std::invalid_argument("factorize: value must be positive");
  }
  std::vector<std::pair<BigInt, unsigned>> factors;
  auto strip = [&](const BigInt& p) {
    unsigned exponent = 0;
    while (mpz_divisible_p(value.get_mpz_t(), p.get_mpz_t()) != 0) {
      value /= p;
      ++exponent;
    }
    if (exponent > 0) {
      factors.emplace_back(p, exponent);
    }
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (BigInt p = 5; p * p <= value; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (value > 1) {
    factors.emplace_back(value, 1);
  }
  return factors;
}

std::string format_factorization(const std::vector<std::pair<BigInt, unsigned>>& factors) {
  if (factors.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& [prime, exponent] : factors) {
    if (!out.empty()) {
      out += " * ";
    }
    out += prime.get_str();
    if (exponent > 1) {
      out += "^" + std::to_string(exponent);
    }
  }
  return out;
}

BigInt from_int128(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
  const auto high = static_cast<std::uint64_t>(magnitude >> 64);
  const auto low = static_cast<std::uint64_t>(magnitude);
  BigInt result;
  mpz_import(result.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &high);
  result <<= 64;
  BigInt low_part;
  mpz_import(low_part.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &low);
  result += low_part;
  return negative ? BigInt(-result) : result;
}

void ExactSum::spill() {
  spilled_ += from_int128(fast_);
  fast_ = 0;
}

void ExactSum::merge(const ExactSum& other) {
  spilled_ += other.spilled_;
  __int128 next;
  if (__builtin_add_overflow(fast_, other.fast_, &next)) {
    spill();
    fast_ = other.fast_;
  } else {
    fast_ = next;
  }
}

BigInt ExactSum::value() const { return spilled_ + from_int128(fast_); }

}  // namespace indsieve
