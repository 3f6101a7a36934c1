#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indsieve/exact.hpp"
#include "indsieve/generate.hpp"
#include "indsieve/graph.hpp"

namespace indsieve {

enum class BoundName { EngbersGalvin, CutlerRadcliffe, KahnCoefficient, ZhaoTotal };

/// Where a report's hypotheses place it: inside a proven statement (a
/// violation is a bug), inside an open conjecture only (a violation is a
/// discovery), or outside both.
enum class BoundScope { Theorem, Conjecture, None };

const char* to_string(BoundName name);
const char* to_string(BoundScope scope);

struct Hypothesis {
  std::string name;
  bool met = false;
};

struct BoundReport {
  std::string graph_id;  ///< graph6
  BoundName bound = BoundName::EngbersGalvin;
  std::optional<int> t;
  bool hypotheses_met = false;
  std::vector<Hypothesis> hypotheses;
  BoundScope scope = BoundScope::None;
  BigInt lhs;
  Rational rhs;
  bool holds = false;     ///< lhs <= rhs, exact
  bool equality = false;  ///< lhs == rhs
  std::optional<bool> equality_certified_extremal;
  std::vector<std::pair<std::string, BigInt>> certificate;
};

/// i_t(K_{δ, n−δ}) = C(n−δ, t) + C(δ, t) for t >= 2; 1 at t = 0 and n at t = 1.
BigInt it_complete_bipartite(long n, long delta, int t);

/// Everything the checkers need about one graph, computed once.
struct GraphProfile {
  Graph graph;
  std::string graph6;
  int delta = 0;
  std::optional<int> regular;
  bool triangle_free = true;
  std::vector<BigInt> counts;  ///< i_0..i_n via the sieve
  BigInt total;                ///< i(G)
  bool disjoint_krr = false;   ///< every component is K_{r,r} for the common degree r >= 1

  BigInt count(int t) const {
    return t >= 0 && static_cast<std::size_t>(t) < counts.size() ? counts[static_cast<std::size_t>(t)] : BigInt(0);
  }
};

GraphProfile profile_graph(const Graph& g);

/// True when every component of g is K_{r,r} with r = the common degree >= 1.
bool is_disjoint_union_of_krr(const Graph& g);

/// i_t(G) <= C(n−δ, t) + C(δ, t) with δ = δ(G). Throws std::domain_error for t < 3.
BoundReport check_engbers_galvin(const GraphProfile& profile, int t);
BoundReport check_engbers_galvin(const Graph& g, int t);

/// i(G) <= a(2^{n−δ} − 1) + 2^b where n = a(n−δ) + b, 0 <= b < n−δ.
/// Throws std::domain_error when n = δ.
BoundReport check_cutler_radcliffe(const GraphProfile& profile);
BoundReport check_cutler_radcliffe(const Graph& g);

/// i_t(G) <= [x^t](2(1+x)^r − 1)^{n/2r}. Throws std::invalid_argument unless g
/// is r-regular with r >= 1.
BoundReport check_kahn_coefficient(const GraphProfile& profile, int t);
BoundReport check_kahn_coefficient(const Graph& g, int t);

/// i(G)^{2r} <= (2^{r+1} − 1)^n, i.e. i(G) <= i(K_{r,r})^{n/2r}, compared as
/// integer powers. Same precondition as the Kahn check.
BoundReport check_zhao_total(const GraphProfile& profile);
BoundReport check_zhao_total(const Graph& g);

struct AuditOptions {
  bool engbers_galvin = false;
  bool cutler_radcliffe = false;
  bool kahn = false;
  bool zhao = false;
  int t_min = 0;
  int t_max = 4;
};

struct AuditSummary {
  std::size_t graphs = 0;
  std::size_t reports = 0;
  std::size_t strict = 0;
  std::size_t equality = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t violations = 0;   ///< theorem scope
  std::size_t discoveries = 0;  ///< conjecture scope
  std::vector<BoundReport> violation_reports;
  std::vector<BoundReport> discovery_reports;
};

/// Runs the selected checks on every graph. Graphs are pulled in chunks and
/// profiled in parallel; reports are emitted through `on_report` in corpus
/// order. Graphs outside a check's precondition (non-regular for Kahn/Zhao,
/// the 0-vertex graph for Cutler–Radcliffe) get no report for that check.
/// Violation and discovery lists are sorted by graph6 key.
AuditSummary audit_corpus(const GraphStream& corpus, const AuditOptions& options,
                          const std::function<void(const BoundReport&)>& on_report = {});

}  // namespace indsieve
