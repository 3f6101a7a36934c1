#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indsieve/exact.hpp"
#include "indsieve/graph.hpp"

namespace indsieve {

/// Induced-subgraph counts: each field is the number of vertex subsets J with
/// G[J] isomorphic to the named pattern. Patterns larger than `up_to` are left
/// at zero and must not be read.
struct Census {
  int up_to = 3;
  BigInt k3, p3;
  BigInt p4, c4, k4, k13, r41, r42, k2uk2;
  BigInt c5;
  /// Pentagons counted from 5-cycles through each edge; present when girth >= 5.
  std::optional<BigInt> c5_per_edge;

  bool has(int pattern_size) const { return pattern_size <= up_to; }
};

/// The seven isolated-vertex-free graphs on four vertices, plus "other" for
/// 4-subsets that contain an isolated vertex.
enum class Pattern4 { K13, P4, K2UK2, C4, R42, R41, K4, WithIsolated };

/// Classification by (edge count, sorted degree sequence); `local` holds the
/// four local adjacency rows.
Pattern4 classify_four(const std::uint64_t* local);

/// Counts all patterns of size <= up_to (3, 4 or 5).
Census full_census(const Graph& g, int up_to);

/// Serial reference: plain filtered enumeration of every subset.
Census full_census_reference(const Graph& g, int up_to);

enum class IdentityStatus { Holds, Violated, NotApplicable };

struct IdentityCheck {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  IdentityStatus status = IdentityStatus::NotApplicable;
  std::string note;
};

const char* to_string(IdentityStatus status);

/// Evaluates the degree-sum identities (always) and the girth-conditioned ones
/// (edge pairs when girth >= 5, p4 = 5·c5 when girth 5 and diameter 2).
/// Conditional identities whose hypotheses fail are NotApplicable.
std::vector<IdentityCheck> census_identities(const Graph& g, const Census& census);

/// Σ_v C(d(v), k)
BigInt degree_binomial_sum(const Graph& g, int k);

}  // namespace indsieve
