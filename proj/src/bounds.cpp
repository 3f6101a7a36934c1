#include "indsieve/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "indsieve/graph6.hpp"
#include "indsieve/series.hpp"
#include "indsieve/sieve.hpp"

namespace indsieve {

const char* to_string(BoundName name) {
  switch (name) {
    case BoundName::EngbersGalvin:
      return "EngbersGalvin";
    case BoundName::CutlerRadcliffe:
      return "CutlerRadcliffe";
    case BoundName::KahnCoefficient:
      return "KahnCoefficient";
    case BoundName::ZhaoTotal:
      return "ZhaoTotal";
  }
  return "unknown";
}

const char* to_string(BoundScope scope) {
  switch (scope) {
    case BoundScope::Theorem:
      return "theorem";
    case BoundScope::Conjecture:
      return "conjecture";
    case BoundScope::None:
      return "none";
  }
  return "unknown";
}

BigInt it_complete_bipartite(long n, long delta, int t) {
  if (delta < 0 || delta > n) {
    throw std::invalid_argument("it_complete_bipartite needs 0 <= delta <= n");
  }
  if (t == 0) {
    return 1;
  }
  if (t == 1) {
    return n;
  }
  return binomial(n - delta, t) + binomial(delta, t);
}

bool is_disjoint_union_of_krr(const Graph& g) {
  const auto r = regular_degree(g);
  if (!r || *r < 1 || g.order() % (2 * *r) != 0) {
    return false;
  }
  for (const auto& part : components(g)) {
    int a = 0;
    int b = 0;
    if (!is_complete_bipartite(induced_subgraph(g, part).graph, &a, &b) || a != *r || b != *r) {
      return false;
    }
  }
  return true;
}

GraphProfile profile_graph(const Graph& g) {
  GraphProfile p;
  p.graph = g;
  p.graph6 = write_graph6(g);
  p.delta = min_degree(g);
  p.regular = regular_degree(g);
  p.triangle_free = is_triangle_free(g);
  p.counts = independence_counts_via_sieve(g);
  p.total = 0;
  for (const BigInt& c : p.counts) {
    p.total += c;
  }
  p.disjoint_krr = is_disjoint_union_of_krr(g);
  return p;
}

namespace {

void settle(BoundReport& report) {
  const Rational lhs(report.lhs);
  report.holds = lhs <= report.rhs;
  report.equality = lhs == report.rhs;
}

}  // namespace

namespace {

void require_eg_size(int t) {
  if (t < 3) {
    throw std::domain_error(
        "the fixed-size minimum-degree bound needs t >= 3; it fails at t = 2 (i_2(K_{1,3}) = 3 < 4 = i_2(2K_2))");
  }
}

}  // namespace

BoundReport check_engbers_galvin(const GraphProfile& p, int t) {
  require_eg_size(t);
  const long n = p.graph.order();
  const long delta = p.delta;
  BoundReport r;
  r.graph_id = p.graph6;
  r.bound = BoundName::EngbersGalvin;
  r.t = t;
  const bool positive = delta >= 1;
  const bool half = n >= 2 * delta;
  const bool cubic = 3 * n >= (delta + 1) * (delta + 2);
  r.hypotheses = {{"delta >= 1", positive}, {"n >= 2*delta", half}, {"n >= (delta+1)(delta+2)/3", cubic}};
  r.hypotheses_met = positive && cubic;
  r.scope = r.hypotheses_met ? BoundScope::Theorem : (positive && half ? BoundScope::Conjecture : BoundScope::None);
  r.lhs = p.count(t);
  r.rhs = Rational(it_complete_bipartite(n, delta, t));
  r.certificate = {{"n", n}, {"delta", delta}};
  settle(r);
  if (r.equality) {
    int a = 0;
    int b = 0;
    r.equality_certified_extremal =
        is_complete_bipartite(p.graph, &a, &b) && std::min(a, b) == delta && std::max(a, b) == n - delta;
  }
  return r;
}

BoundReport check_engbers_galvin(const Graph& g, int t) {
  require_eg_size(t);
  return check_engbers_galvin(profile_graph(g), t);
}

BoundReport check_cutler_radcliffe(const GraphProfile& p) {
  const long n = p.graph.order();
  const long delta = p.delta;
  if (n == delta) {
    throw std::domain_error("n = delta leaves no decomposition n = a(n - delta) + b");
  }
  const long width = n - delta;
  const long a = n / width;
  const long b = n % width;
  BoundReport r;
  r.graph_id = p.graph6;
  r.bound = BoundName::CutlerRadcliffe;
  r.hypotheses = {{"delta >= 1", delta >= 1}, {"n > delta", true}};
  r.hypotheses_met = delta >= 1;
  r.scope = r.hypotheses_met ? BoundScope::Theorem : BoundScope::None;
  r.lhs = p.total;
  BigInt pow_width;
  BigInt pow_b;
  mpz_ui_pow_ui(pow_width.get_mpz_t(), 2, static_cast<unsigned long>(width));
  mpz_ui_pow_ui(pow_b.get_mpz_t(), 2, static_cast<unsigned long>(b));
  r.rhs = Rational(BigInt(a) * (pow_width - 1) + pow_b);
  r.certificate = {{"n", n}, {"delta", delta}, {"a", a}, {"b", b}};
  settle(r);
  if (r.equality) {
    int pa = 0;
    int pb = 0;
    r.equality_certified_extremal =
        is_complete_bipartite(p.graph, &pa, &pb) && std::min(pa, pb) == delta && std::max(pa, pb) == n - delta;
  }
  return r;
}

BoundReport check_cutler_radcliffe(const Graph& g) {
  if (g.order() == 0) {
    throw std::domain_error("n = delta leaves no decomposition n = a(n - delta) + b");
  }
  return check_cutler_radcliffe(profile_graph(g));
}

namespace {

int require_regular(const GraphProfile& p) {
  if (!p.regular || *p.regular < 1 || p.graph.order() == 0) {
    throw std::invalid_argument("graph must be r-regular with r >= 1");
  }
  return *p.regular;
}

}  // namespace

BoundReport check_kahn_coefficient(const GraphProfile& p, int t) {
  const int degree = require_regular(p);
  if (t < 0) {
    throw std::invalid_argument("t must be nonnegative");
  }
  const long n = p.graph.order();
  BoundReport r;
  r.graph_id = p.graph6;
  r.bound = BoundName::KahnCoefficient;
  r.t = t;
  const bool small_t = t <= 3;
  const bool four_triangle_free = t == 4 && p.triangle_free;
  const bool half = 2L * t <= n;
  r.hypotheses = {{"t <= 3", small_t}, {"t = 4 and triangle-free", four_triangle_free}, {"t <= n/2", half}};
  r.hypotheses_met = small_t || four_triangle_free;
  r.scope = r.hypotheses_met ? BoundScope::Theorem : (half ? BoundScope::Conjecture : BoundScope::None);
  r.lhs = p.count(t);
  r.rhs = kahn_bound_coefficient(n, degree, t);
  r.certificate = {{"n", n}, {"r", degree}};
  settle(r);
  r.equality_certified_extremal = p.disjoint_krr;
  return r;
}

BoundReport check_kahn_coefficient(const Graph& g, int t) { return check_kahn_coefficient(profile_graph(g), t); }

BoundReport check_zhao_total(const GraphProfile& p) {
  const int degree = require_regular(p);
  const long n = p.graph.order();
  BoundReport r;
  r.graph_id = p.graph6;
  r.bound = BoundName::ZhaoTotal;
  r.hypotheses = {{"r-regular with r >= 1", true}};
  r.hypotheses_met = true;
  r.scope = BoundScope::Theorem;
  // i(G) <= i(K_{r,r})^{n/2r}, raised to the power 2r to stay in integers
  mpz_pow_ui(r.lhs.get_mpz_t(), p.total.get_mpz_t(), static_cast<unsigned long>(2 * degree));
  BigInt block;
  mpz_ui_pow_ui(block.get_mpz_t(), 2, static_cast<unsigned long>(degree + 1));
  block -= 1;
  BigInt rhs;
  mpz_pow_ui(rhs.get_mpz_t(), block.get_mpz_t(), static_cast<unsigned long>(n));
  r.rhs = Rational(rhs);
  r.certificate = {{"n", n}, {"r", degree}, {"i", p.total}, {"power", 2 * degree}};
  settle(r);
  r.equality_certified_extremal = p.disjoint_krr;
  return r;
}

BoundReport check_zhao_total(const Graph& g) { return check_zhao_total(profile_graph(g)); }

namespace {

std::vector<BoundReport> reports_for(const Graph& g, const AuditOptions& options) {
  std::vector<BoundReport> out;
  const GraphProfile p = profile_graph(g);
  const int n = g.order();
  const int t_hi = std::min(options.t_max, n);
  if (options.engbers_galvin) {
    for (int t = std::max(options.t_min, 3); t <= t_hi; ++t) {
      out.push_back(check_engbers_galvin(p, t));
    }
  }
  if (options.cutler_radcliffe && n > 0) {
    out.push_back(check_cutler_radcliffe(p));
  }
  const bool regular = p.regular && *p.regular >= 1;
  if (options.kahn && regular) {
    for (int t = std::max(options.t_min, 0); t <= t_hi; ++t) {
      out.push_back(check_kahn_coefficient(p, t));
    }
  }
  if (options.zhao && regular) {
    out.push_back(check_zhao_total(p));
  }
  return out;
}

void tally(AuditSummary& summary, const BoundReport& r) {
  ++summary.reports;
  if (r.scope == BoundScope::None) {
    ++summary.hypothesis_not_met;
  } else if (r.holds) {
    ++(r.equality ? summary.equality : summary.strict);
  } else if (r.scope == BoundScope::Theorem) {
    ++summary.violations;
    summary.violation_reports.push_back(r);
  } else {
    ++summary.discoveries;
    summary.discovery_reports.push_back(r);
  }
}

}  // namespace

AuditSummary audit_corpus(const GraphStream& corpus, const AuditOptions& options,
                          const std::function<void(const BoundReport&)>& on_report) {
  constexpr std::size_t kChunk = 4096;
  AuditSummary summary;
  std::vector<Graph> chunk;
  std::vector<std::vector<BoundReport>> results;
  bool done = false;
  while (!done) {
    chunk.clear();
    while (chunk.size() < kChunk) {
      auto g = corpus();
      if (!g) {
        done = true;
        break;
      }
      chunk.push_back(std::move(*g));
    }
    results.assign(chunk.size(), {});
    const auto count = static_cast<long>(chunk.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) {
      results[static_cast<std::size_t>(i)] = reports_for(chunk[static_cast<std::size_t>(i)], options);
    }
    for (const auto& per_graph : results) {
      ++summary.graphs;
      for (const BoundReport& r : per_graph) {
        tally(summary, r);
        if (on_report) {
          on_report(r);
        }
      }
    }
  }
  auto by_key = [](const BoundReport& a, const BoundReport& b) {
    return std::tie(a.graph_id, a.bound, a.t) < std::tie(b.graph_id, b.bound, b.t);
  };
  std::stable_sort(summary.violation_reports.begin(), summary.violation_reports.end(), by_key);
  std::stable_sort(summary.discovery_reports.begin(), summary.discovery_reports.end(), by_key);
  return summary;
}

}  // namespace indsieve
