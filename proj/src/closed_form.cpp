#include "indsieve/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace indsieve {

SmallSieveTerms n234_from_census(const Graph& g, const Census& c) {
  if (!c.has(4)) {
    throw std::invalid_argument("n234_from_census needs a census of depth >= 4");
  }
  SmallSieveTerms terms;
  terms.n2 = -BigInt(static_cast<unsigned long>(g.size()));
  terms.n3 = degree_binomial_sum(g, 2) - c.k3;
  terms.n4 = -degree_binomial_sum(g, 3) + c.k2uk2 - c.c4 + c.k4;
  return terms;
}

ThreeSetCount i3_identity(const Graph& g, const Census& c) {
  const long n = g.order();
  const BigInt m = BigInt(static_cast<unsigned long>(g.size()));
  const BigInt rhs = binomial(n, 3) - BigInt(n - 2) * m + degree_binomial_sum(g, 2);
  return {rhs - c.k3, c.k3};
}

FourSetCount i4_identity(const Graph& g, const Census& c) {
  if (!c.has(4)) {
    throw std::invalid_argument("i4_identity needs a census of depth >= 4");
  }
  const long n = g.order();
  const BigInt m = BigInt(static_cast<unsigned long>(g.size()));
  const BigInt rhs = binomial(n, 4) - binomial(n - 2, 2) * m + BigInt(n - 3) * (degree_binomial_sum(g, 2) - c.k3) -
                     degree_binomial_sum(g, 3) + c.k2uk2 - c.c4;
  return {rhs + c.k4, c.k4};
}

RegularCounts regular_i3_i4(long n, long r, const BigInt& k3, const BigInt& k4, const BigInt& c4,
                            const BigInt& k2uk2) {
  if (n < 0 || r < 0) {
    throw std::invalid_argument("regular_i3_i4: n and r must be nonnegative");
  }
  if ((n * r) % 2 != 0) {
    throw std::invalid_argument("no " + std::to_string(r) + "-regular graph on " + std::to_string(n) +
                                " vertices: n*r is odd");
  }
  const BigInt m = BigInt(n) * r / 2;
  const BigInt pairs = BigInt(n) * binomial(r, 2);
  const BigInt triples = BigInt(n) * binomial(r, 3);
  RegularCounts out;
  out.i3 = binomial(n, 3) - BigInt(n - 2) * m + pairs - k3;
  out.i4 = binomial(n, 4) - binomial(n - 2, 2) * m + BigInt(n - 3) * (pairs - k3) - triples + k2uk2 - c4 + k4;
  return out;
}

MooreParams::MooreParams(int r) : r_(r) {
  if (r != 2 && r != 3 && r != 7 && r != 57) {
    throw std::invalid_argument("girth-5 diameter-2 regular graphs need r in {2, 3, 7, 57}, got " +
                                std::to_string(r));
  }
}

MooreCounts moore_counts(const MooreParams& p) {
  const long n = p.order();
  const long m = p.size();
  const long r = p.degree();
  const BigInt bm = BigInt(m);
  const BigInt pentagon_edges = bm * (r - 1) * (r - 1);
  if (mpz_divisible_ui_p(pentagon_edges.get_mpz_t(), 5) == 0) {
    throw std::logic_error("m(r-1)^2 not divisible by 5");
  }
  MooreCounts out;
  out.c5 = pentagon_edges / 5;
  out.i3 = binomial(n, 3) - BigInt(n - 2) * bm + BigInt(n) * binomial(r, 2);
  out.i4 = binomial(n, 4) - binomial(n - 2, 2) * bm + BigInt(n) * (n - 4) * binomial(r, 2) -
           BigInt(n) * binomial(r, 3) + binomial(m, 2) - pentagon_edges;
  return out;
}

MooreStructureReport moore_structure_identities(const Graph& g) {
  MooreStructureReport report;
  const auto r = regular_degree(g);
  if (!r) {
    report.reason = "not regular";
    return report;
  }
  if (girth(g) != 5) {
    report.reason = "girth is not 5";
    return report;
  }
  if (diameter(g) != 2) {
    report.reason = "diameter is not 2";
    return report;
  }
  report.applicable = true;
  report.degree = *r;
  const Census c = full_census(g, 5);
  const long n = g.order();
  const long m = static_cast<long>(g.size());
  const BigInt binom_m = binomial(m, 2);
  auto check = [&](std::string name, BigInt lhs, BigInt rhs) {
    const IdentityStatus status = lhs == rhs ? IdentityStatus::Holds : IdentityStatus::Violated;
    report.identities.push_back({std::move(name), std::move(lhs), std::move(rhs), status, {}});
  };
  check("k2uk2 = C(m,2) - p3 - 5 c5", c.k2uk2, binom_m - c.p3 - 5 * c.c5);
  check("k2uk2 = C(m,2) - n C(r,2) - m (r-1)^2", c.k2uk2,
        binom_m - BigInt(n) * binomial(*r, 2) - BigInt(m) * (*r - 1) * (*r - 1));
  check("p4 = 5 c5", c.p4, 5 * c.c5);
  return report;
}

}  // namespace indsieve
