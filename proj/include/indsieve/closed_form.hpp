#pragma once

#include <vector>

#include "indsieve/census.hpp"
#include "indsieve/exact.hpp"
#include "indsieve/graph.hpp"

namespace indsieve {

/// N_2, N_3, N_4 from degree sums and the census:
///   N_2 = −m,  N_3 = Σ C(d,2) − k3,  N_4 = −Σ C(d,3) + k2uk2 − c4 + k4.
struct SmallSieveTerms {
  BigInt n2, n3, n4;
};

/// Census depth must be at least 4.
SmallSieveTerms n234_from_census(const Graph& g, const Census& census);

struct ThreeSetCount {
  BigInt i3;
  BigInt k3;
};

struct FourSetCount {
  BigInt i4;
  BigInt k4;
};

/// i3 = C(n,3) − (n−2)m + Σ C(d,2) − k3.
ThreeSetCount i3_identity(const Graph& g, const Census& census);

/// i4 = C(n,4) − C(n−2,2)m + (n−3)(Σ C(d,2) − k3) − Σ C(d,3) + k2uk2 − c4 + k4.
FourSetCount i4_identity(const Graph& g, const Census& census);

struct RegularCounts {
  BigInt i3;
  BigInt i4;
};

/// The same identities for an r-regular graph on n vertices, where the degree
/// sums collapse to n·C(r,k). Throws std::invalid_argument when n·r is odd or
/// either parameter is negative.
RegularCounts regular_i3_i4(long n, long r, const BigInt& k3, const BigInt& k4, const BigInt& c4,
                            const BigInt& k2uk2);

/// Degree of a girth-5, diameter-2 regular graph: r ∈ {2, 3, 7, 57}, n = r² + 1.
class MooreParams {
 public:
  /// Throws std::invalid_argument for r outside {2, 3, 7, 57}.
  explicit MooreParams(int r);

  int degree() const { return r_; }
  long order() const { return static_cast<long>(r_) * r_ + 1; }
  long size() const { return order() * r_ / 2; }

 private:
  int r_;
};

struct MooreCounts {
  BigInt c5;
  BigInt i3;
  BigInt i4;
};

/// c5 = m(r−1)²/5, i3 = C(n,3) − (n−2)m + n·C(r,2),
/// i4 = C(n,4) − C(n−2,2)m + n(n−4)C(r,2) − n·C(r,3) + C(m,2) − m(r−1)².
MooreCounts moore_counts(const MooreParams& params);

struct MooreStructureReport {
  bool applicable = false;
  std::string reason;
  int degree = 0;
  std::vector<IdentityCheck> identities;
};

/// Checks, against a depth-5 census of g, the three structural identities of
/// girth-5 diameter-2 regular graphs:
///   k2uk2 = C(m,2) − p3 − 5c5,  k2uk2 = C(m,2) − n·C(r,2) − m(r−1)²,  p4 = 5c5.
MooreStructureReport moore_structure_identities(const Graph& g);

}  // namespace indsieve
