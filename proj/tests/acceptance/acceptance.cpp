// Acceptance run: one line per criterion, "PASS"/"FAIL", followed by detail lines.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "indsieve/bounds.hpp"
#include "indsieve/census.hpp"
#include "indsieve/closed_form.hpp"
#include "indsieve/generate.hpp"
#include "indsieve/graph6.hpp"
#include "indsieve/named.hpp"
#include "indsieve/oracle.hpp"
#include "indsieve/series.hpp"
#include "indsieve/sieve.hpp"

using namespace indsieve;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& text) { details.push_back(text); }
};

Graph make(std::string_view spec) { return build_named(parse_named(spec)); }

std::vector<Vertex> all_of(const Graph& g) {
  std::vector<Vertex> v(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) {
    v[static_cast<std::size_t>(i)] = i;
  }
  return v;
}

std::string str(const BigInt& v) { return v.get_str(); }

// 1
Outcome psi_table() {
  Outcome out;
  const std::vector<std::pair<const char*, std::vector<Edge>>> patterns = {
      {"K_{1,3}", {{0, 1}, {0, 2}, {0, 3}}},
      {"K_2+K_2", {{0, 1}, {2, 3}}},
      {"P_4", {{0, 1}, {1, 2}, {2, 3}}},
      {"C_4", {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {"R_{4,2}", {{0, 1}, {1, 2}, {0, 2}, {2, 3}}},
      {"R_{4,1}", {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}}},
      {"K_4", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
  };
  const std::int64_t expected[] = {-1, 1, 0, -1, -1, -2, -3};
  std::string row;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const Graph g = Graph::from_edges(4, patterns[i].second);
    const std::int64_t value = psi(g, all_of(g)).value;
    out.expect(value == expected[i], std::string(patterns[i].first) + " gave " + std::to_string(value));
    row += std::string(i ? ", " : "") + patterns[i].first + "=" + std::to_string(value);
  }
  out.note(row);
  long subsets = 0;
  auto stream = generate_small_graphs({5, 0, {}});
  while (auto g = stream()) {
    const int n = g->order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<Vertex> j;
      for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) {
          j.push_back(v);
        }
      }
      if (psi(*g, j).value != oracle::brute_force_psi(*g, j).value) {
        out.expect(false, "psi on a graph with " + std::to_string(n) + " vertices");
      }
      ++subsets;
    }
  }
  out.note("psi = brute_force_psi on " + std::to_string(subsets) + " (graph, subset) pairs, n <= 5");
  return out;
}

// 2
Outcome sieve_oracle() {
  Outcome out;
  long graphs = 0;
  long mismatches = 0;
  auto stream = generate_small_graphs({7, 0, {}});
  while (auto g = stream()) {
    ++graphs;
    for (int t = 0; t <= 7; ++t) {
      if (it_via_sieve(*g, t) != oracle::brute_force_it(*g, t)) {
        ++mismatches;
      }
    }
  }
  out.expect(mismatches == 0, std::to_string(mismatches) + " (graph, t) pairs disagree");
  out.note(std::to_string(graphs) + " labeled graphs on 0..7 vertices, t = 0..7");
  return out;
}

// 3
Outcome closed_form_paths() {
  Outcome out;
  long graphs = 0;
  long mismatches = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const Census c = full_census(g, 4);
    const SmallSieveTerms terms = n234_from_census(g, c);
    const SieveTable table = sieve_coefficients(g, std::min(4, g.order()));
    const BigInt n3 = table.t_max >= 3 ? table[3] : BigInt(0);
    const BigInt n4 = table.t_max >= 4 ? table[4] : BigInt(0);
    const BigInt n2 = table.t_max >= 2 ? table[2] : BigInt(0);
    bool ok = terms.n2 == n2 && terms.n3 == n3 && terms.n4 == n4;
    ok = ok && i3_identity(g, c).i3 == oracle::brute_force_it(g, 3);
    ok = ok && i4_identity(g, c).i4 == oracle::brute_force_it(g, 4);
    mismatches += ok ? 0 : 1;
  };
  auto stream = generate_small_graphs({7, 0, {}});
  while (auto g = stream()) {
    check(*g);
  }
  SamplingOptions sampling;
  sampling.n_min = 8;
  sampling.n_max = 14;
  sampling.samples = 500;
  sampling.seed = 20240601;
  auto random = sample_random_graphs(sampling);
  while (auto g = random()) {
    check(*g);
  }
  out.expect(mismatches == 0, std::to_string(mismatches) + " graphs disagree");
  out.note(std::to_string(graphs) + " graphs (exhaustive n <= 7 plus 500 seeded on 8..14 vertices)");
  return out;
}

// 4
Outcome petersen_facts() {
  Outcome out;
  const Graph g = make("petersen");
  const Census c = full_census(g, 5);
  const MooreCounts moore = moore_counts(MooreParams(3));
  const auto regular = regular_i3_i4(10, 3, c.k3, c.k4, c.c4, c.k2uk2);
  const long m = static_cast<long>(g.size());
  const BigInt k2uk2_closed = binomial(m, 2) - BigInt(10) * binomial(3, 2) - BigInt(m) * 4;
  struct Fact {
    const char* name;
    long expected;
    std::vector<std::pair<const char*, BigInt>> paths;
  };
  const std::vector<Fact> facts = {
      {"i_3", 30, {{"closed form", i3_identity(g, c).i3}, {"regular form", regular.i3}, {"oracle", oracle::brute_force_it(g, 3)}, {"sieve", it_via_sieve(g, 3)}}},
      {"i_4", 5, {{"closed form", i4_identity(g, c).i4}, {"regular form", regular.i4}, {"oracle", oracle::brute_force_it(g, 4)}, {"sieve", it_via_sieve(g, 4)}}},
      {"c_5", 12, {{"census", c.c5}, {"per-edge count", c.c5_per_edge.value_or(-1)}, {"Moore formula", moore.c5}}},
      {"p_4", 60, {{"census", c.p4}, {"5 c_5 (Moore formula)", 5 * moore.c5}}},
      {"k_2+k_2", 15, {{"census", c.k2uk2}, {"C(m,2) - n C(r,2) - m (r-1)^2", k2uk2_closed}}},
  };
  for (const Fact& f : facts) {
    std::string line = std::string(f.name) + ":";
    for (const auto& [path, value] : f.paths) {
      out.expect(value == f.expected, std::string(f.name) + " via " + path + " = " + str(value));
      line += std::string(" ") + path + "=" + str(value);
    }
    out.note(line);
  }
  return out;
}

// 5
Outcome hoffman_singleton() {
  Outcome out;
  const Graph g = make("hoffman-singleton");
  out.expect(g.order() == 50 && regular_degree(g) == 7, "order/regularity");
  out.expect(girth(g) == 5, "girth");
  out.expect(diameter(g) == 2, "diameter");
  const MooreCounts moore = moore_counts(MooreParams(7));
  out.expect(moore.i3 == 12250, "formula i_3 = " + str(moore.i3));
  out.expect(moore.c5 == 1260, "formula c_5 = " + str(moore.c5));
  const BigInt i3 = oracle::brute_force_it(g, 3);
  out.expect(i3 == moore.i3, "brute-force i_3 = " + str(i3));
  const Census c = full_census(g, 5);
  out.expect(c.c5 == moore.c5, "5-subset census c_5 = " + str(c.c5));
  // plain walk over all C(50,4) four-sets
  long four_sets = 0;
  long independent = 0;
  for (int a = 0; a < 50; ++a) {
    for (int b = a + 1; b < 50; ++b) {
      for (int x = b + 1; x < 50; ++x) {
        for (int y = x + 1; y < 50; ++y) {
          ++four_sets;
          const bool free = !g.adjacent(a, b) && !g.adjacent(a, x) && !g.adjacent(a, y) && !g.adjacent(b, x) &&
                            !g.adjacent(b, y) && !g.adjacent(x, y);
          independent += free ? 1 : 0;
        }
      }
    }
  }
  out.expect(four_sets == 230300, "four-set count");
  out.expect(BigInt(independent) == moore.i4, "formula i_4 = " + str(moore.i4) + " vs " + std::to_string(independent));
  out.note("i_3 = " + str(i3) + ", c_5 = " + str(c.c5) + ", i_4 = " + std::to_string(independent) + " over " +
           std::to_string(four_sets) + " four-sets");
  return out;
}

// 6
Outcome moore_57() {
  Outcome out;
  const MooreCounts m = moore_counts(MooreParams(57));
  out.expect(m.c5 == BigInt("58094400"), "c_5 = " + str(m.c5));
  out.expect(m.i3 == BigInt("5420415000"), "i_3 = " + str(m.i3));
  const BigInt i4_expected = BigInt(4) * 625 * 7 * 11 * 13 * 19 * 87751;
  out.expect(m.i4 == i4_expected, "i_4 = " + str(m.i4));
  const std::pair<const BigInt*, const char*> targets[] = {
      {&m.c5, "2^6 * 3 * 5^2 * 7^2 * 13 * 19"},
      {&m.i3, "2^3 * 3 * 5^4 * 7 * 11 * 13 * 19^2"},
      {&m.i4, "2^2 * 5^4 * 7 * 11 * 13 * 19 * 87751"},
  };
  for (const auto& [value, expected] : targets) {
    const std::string got = format_factorization(factorize(*value));
    out.expect(got == expected, "factorization " + got);
    out.note(str(*value) + " = " + got);
  }
  return out;
}

// 7
Outcome series_identities() {
  Outcome out;
  long compared = 0;
  for (int r = 1; r <= 4; ++r) {
    const RationalSeries block = bipartite_block_series(r, 8);
    for (int k = 1; k <= 3; ++k) {
      const Graph g = build_named({named::KRRCopies{k, r}});
      const RationalSeries power = series_int_pow(block, k);
      for (int t = 0; t <= 8; ++t) {
        out.expect(power[t] == Rational(oracle::brute_force_it(g, t)),
                   "r=" + std::to_string(r) + " k=" + std::to_string(k) + " t=" + std::to_string(t));
        ++compared;
      }
    }
  }
  std::mt19937_64 rng(7);
  auto draw = [&rng](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> c{Rational(1)};
    for (int j = 1; j <= 12; ++j) {
      c.emplace_back(draw(-9, 9), draw(1, 6));
    }
    const RationalSeries a(12, c);
    const long p = draw(-7, 7);
    const long q = draw(1, 6);
    const Rational alpha(p, q);
    const RationalSeries root = series_rational_pow(a, alpha);
    const RationalSeries lhs = series_int_pow(root, q);
    const RationalSeries rhs = p >= 0 ? series_int_pow(a, p) : series_rational_pow(a, Rational(p));
    out.expect(lhs == rhs, "exponent " + std::to_string(p) + "/" + std::to_string(q));
  }
  out.note(std::to_string(compared) + " coefficients of (2(1+x)^r - 1)^k against i_t(k K_{r,r}); 20 random exponents at order 12");
  return out;
}

// 8
Outcome kahn_audit() {
  Outcome out;
  AuditOptions options;
  options.kahn = true;
  options.t_min = 0;
  options.t_max = 4;
  GraphFilter regular;
  regular.regular_only = true;
  long in_scope = 0;
  long violations = 0;
  long equal_extremal = 0;
  long equal_not_extremal = 0;
  long strict_extremal = 0;
  // equality observed on non-extremal graphs, bucketed by t and triangle-freeness
  long tight_by_t[5][2] = {};
  long tight_break_t4 = 0;
  std::string example;
  const AuditSummary summary = audit_corpus(generate_small_graphs({7, 1, regular}), options, [&](const BoundReport& r) {
    if (r.scope != BoundScope::Theorem) {
      return;
    }
    ++in_scope;
    violations += r.holds ? 0 : 1;
    const bool extremal = r.equality_certified_extremal.value_or(false);
    if (r.equality && extremal) {
      ++equal_extremal;
    } else if (r.equality) {
      ++equal_not_extremal;
      const bool triangle_free = is_triangle_free(parse_graph6(r.graph_id));
      tight_by_t[*r.t][triangle_free ? 1 : 0]++;
      tight_break_t4 += *r.t == 4 ? 1 : 0;
      if (example.empty() && *r.t >= 3) {
        example = r.graph_id + " at t=" + std::to_string(*r.t);
      }
    } else if (extremal) {
      ++strict_extremal;
    }
  });
  out.expect(violations == 0, std::to_string(violations) + " theorem-scope violations");
  out.expect(equal_not_extremal == 0 && strict_extremal == 0,
             "equality-iff-extremal fails: " + std::to_string(equal_not_extremal) +
                 " tight reports on graphs that are not disjoint copies of K_{r,r}, " +
                 std::to_string(strict_extremal) + " strict reports on such copies");
  out.note(std::to_string(summary.graphs) + " regular graphs, " + std::to_string(in_scope) +
           " in-scope reports, " + std::to_string(equal_extremal) + " tight on disjoint K_{r,r}");
  for (int t = 0; t <= 4; ++t) {
    if (tight_by_t[t][0] + tight_by_t[t][1] > 0) {
      out.note("tight but not extremal at t=" + std::to_string(t) + ": " + std::to_string(tight_by_t[t][1]) +
               " triangle-free, " + std::to_string(tight_by_t[t][0]) + " with triangles");
    }
  }
  if (!example.empty()) {
    out.note("first tight non-extremal case with t >= 3: " + example);
  }
  out.note("t=4 triangle-free tight non-extremal reports: " + std::to_string(tight_break_t4));
  return out;
}

// 9
Outcome engbers_galvin_audit() {
  Outcome out;
  AuditOptions options;
  options.engbers_galvin = true;
  options.t_min = 3;
  options.t_max = 7;
  long in_scope = 0;
  long violations = 0;
  long equalities = 0;
  const AuditSummary summary = audit_corpus(generate_small_graphs({7, 1, {}}), options, [&](const BoundReport& r) {
    if (!r.hypotheses_met) {
      return;
    }
    ++in_scope;
    violations += r.holds ? 0 : 1;
    equalities += r.equality ? 1 : 0;
  });
  out.expect(violations == 0 && summary.violations == 0, std::to_string(violations) + " violations");
  out.note(std::to_string(summary.graphs) + " graphs, " + std::to_string(in_scope) + " reports meeting the hypotheses, " +
           std::to_string(equalities) + " tight");

  const Graph star = make("kbip:1,3");
  const Graph matching = make("krr-copies:2,1");
  const BigInt star2 = oracle::brute_force_it(star, 2);
  const BigInt matching2 = oracle::brute_force_it(matching, 2);
  out.expect(star2 == 3 && matching2 == 4, "i_2(K_{1,3}) = " + str(star2) + ", i_2(2K_2) = " + str(matching2));
  bool rejected = false;
  try {
    check_engbers_galvin(star, 2);
  } catch (const std::domain_error& e) {
    rejected = std::string(e.what()).find("K_{1,3}") != std::string::npos;
    out.note(std::string("t=2 rejected: ") + e.what());
  }
  out.expect(rejected, "t = 2 was not rejected");
  return out;
}

// 10
Outcome cutler_radcliffe_audit() {
  Outcome out;
  // the decomposition n = a(n - δ) + b with a = floor(n / (n - δ)) must give
  // 2^{n-δ} + 2^δ - 1 whenever n >= 2δ
  long symbolic = 0;
  for (long n = 2; n <= 300; ++n) {
    for (long delta = 1; 2 * delta <= n; ++delta) {
      const long a = n / (n - delta);
      const long b = n % (n - delta);
      BigInt lhs = BigInt(a) * ((BigInt(1) << static_cast<mp_bitcnt_t>(n - delta)) - 1) + (BigInt(1) << static_cast<mp_bitcnt_t>(b));
      BigInt rhs = (BigInt(1) << static_cast<mp_bitcnt_t>(n - delta)) + (BigInt(1) << static_cast<mp_bitcnt_t>(delta)) - 1;
      const bool ok = (n == 2 * delta) ? (a == 2 && b == 0 && lhs == rhs) : (a == 1 && b == delta && lhs == rhs);
      out.expect(ok, "decomposition at n=" + std::to_string(n) + " delta=" + std::to_string(delta));
      ++symbolic;
    }
  }
  out.note("decomposition pre-check: " + std::to_string(symbolic) + " (n, delta) pairs with n >= 2 delta, n <= 300");

  AuditOptions options;
  options.cutler_radcliffe = true;
  long in_scope = 0;
  long violations = 0;
  const AuditSummary summary = audit_corpus(generate_small_graphs({7, 1, {}}), options, [&](const BoundReport& r) {
    if (!r.hypotheses_met) {
      return;
    }
    ++in_scope;
    violations += r.holds ? 0 : 1;
  });
  out.expect(violations == 0 && summary.violations == 0, std::to_string(violations) + " violations");
  out.note(std::to_string(summary.graphs) + " graphs, " + std::to_string(in_scope) + " reports with delta >= 1");
  for (const char* spec : {"cycle:5", "complete:4", "kbip:2,4"}) {
    const BoundReport r = check_cutler_radcliffe(make(spec));
    out.expect(r.equality, std::string(spec) + " not tight: " + str(r.lhs) + " vs " + to_fraction_string(r.rhs));
    out.note(std::string(spec) + ": i = " + str(r.lhs) + ", bound = " + to_fraction_string(r.rhs));
  }
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "psi table and psi = brute_force_psi on n <= 5", 1, psi_table},
      {2, "sieve = oracle on all graphs with n <= 7, t <= 7", 600, sieve_oracle},
      {3, "closed forms = sieve and oracle", 900, closed_form_paths},
      {4, "Petersen facts by two paths", 1, petersen_facts},
      {5, "Hoffman-Singleton validation and counts", 30, hoffman_singleton},
      {6, "r = 57 constants and factorizations", 1, moore_57},
      {7, "series identities", 5, series_identities},
      {8, "coefficient bound audit on regular graphs, n <= 7", 900, kahn_audit},
      {9, "fixed-size minimum-degree bound audit, n <= 7", 900, engbers_galvin_audit},
      {10, "total-count bound audit, n <= 7", 900, cutler_radcliffe_audit},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 1;
    }
  }
  bool all = true;
  bool ran = false;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) {
      continue;
    }
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.note(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      outcome.pass = false;
      outcome.note("over time budget of " + std::to_string(c.budget_seconds) + " s");
    }
    std::printf("%s criterion %d: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title, seconds);
    for (const std::string& line : outcome.details) {
      std::printf("    %s\n", line.c_str());
    }
    std::fflush(stdout);
    all = all && outcome.pass;
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 1;
  }
  return all ? 0 : 1;
}
