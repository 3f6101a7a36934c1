#include <doctest.h>

#include "indsieve/bounds.hpp"
#include "indsieve/oracle.hpp"
#include "support.hpp"

using namespace indsieve;
using testing::make;

namespace {

BigInt certificate(const BoundReport& r, const std::string& key) {
  for (const auto& [k, v] : r.certificate) {
    if (k == key) {
      return v;
    }
  }
  FAIL("missing certificate field ", key);
  return 0;
}

}  // namespace

TEST_CASE("i_t of K_{δ,n−δ}") {
  CHECK(it_complete_bipartite(4, 1, 2) == 3);
  CHECK(it_complete_bipartite(10, 3, 3) == 36);
  CHECK(it_complete_bipartite(10, 3, 3) == oracle::brute_force_it(make("kbip:3,7"), 3));
  CHECK(it_complete_bipartite(6, 2, 5) == 0);
  CHECK(it_complete_bipartite(6, 2, 0) == 1);
  CHECK(it_complete_bipartite(6, 2, 1) == 6);
  CHECK_THROWS(it_complete_bipartite(3, 4, 1));
}

TEST_CASE("minimum-degree bound at fixed size") {
  const BoundReport star = check_engbers_galvin(testing::k13(), 3);
  CHECK(star.holds);
  CHECK(star.equality);
  CHECK(star.equality_certified_extremal == true);

  const BoundReport petersen = check_engbers_galvin(make("petersen"), 3);
  CHECK(petersen.hypotheses_met);
  CHECK(petersen.scope == BoundScope::Theorem);
  CHECK(petersen.lhs == 30);
  CHECK(petersen.rhs == 36);
  CHECK(petersen.holds);
  CHECK_FALSE(petersen.equality);
  CHECK(certificate(petersen, "delta") == 3);

  const BoundReport c5 = check_engbers_galvin(make("cycle:5"), 3);
  CHECK(c5.lhs == 0);
  CHECK(c5.rhs == 1);
  CHECK(c5.holds);

  try {
    check_engbers_galvin(testing::k13(), 2);
    FAIL("t = 2 accepted");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("K_{1,3}") != std::string::npos);
  }
}

TEST_CASE("hypothesis reasons are recorded separately") {
  // K_{4,5}: n = 9 >= 2δ = 8, but 3n = 27 < (δ+1)(δ+2) = 30
  const BoundReport r = check_engbers_galvin(make("kbip:4,5"), 3);
  REQUIRE(r.hypotheses.size() == 3);
  CHECK(r.hypotheses[0].met);
  CHECK(r.hypotheses[1].met);
  CHECK_FALSE(r.hypotheses[2].met);
  CHECK_FALSE(r.hypotheses_met);
  CHECK(r.scope == BoundScope::Conjecture);
  CHECK(r.equality);

  const BoundReport k7 = check_engbers_galvin(make("complete:7"), 3);
  CHECK_FALSE(k7.hypotheses[1].met);
  CHECK_FALSE(k7.hypotheses[2].met);
  CHECK(k7.scope == BoundScope::None);
}

TEST_CASE("total-count bound") {
  const BoundReport k24 = check_cutler_radcliffe(make("kbip:2,4"));
  CHECK(k24.lhs == 19);
  CHECK(k24.rhs == 19);
  CHECK(k24.equality);
  CHECK(certificate(k24, "a") == 1);
  CHECK(certificate(k24, "b") == 2);
  CHECK(k24.equality_certified_extremal == true);

  const BoundReport c5 = check_cutler_radcliffe(make("cycle:5"));
  CHECK(c5.lhs == 11);
  CHECK(c5.equality);
  const BoundReport k4 = check_cutler_radcliffe(make("complete:4"));
  CHECK(k4.lhs == 5);
  CHECK(k4.equality);
  CHECK(certificate(k4, "a") == 4);
  CHECK(certificate(k4, "b") == 0);

  const BoundReport isolated = check_cutler_radcliffe(make("cycle:4+empty:1"));
  CHECK_FALSE(isolated.hypotheses_met);
  CHECK_THROWS_AS(check_cutler_radcliffe(Graph(0)), std::domain_error);
}

TEST_CASE("coefficient bound for regular graphs") {
  const BoundReport matching = check_kahn_coefficient(make("krr-copies:2,1"), 2);
  CHECK(matching.lhs == 4);
  CHECK(matching.rhs == 4);
  CHECK(matching.equality);
  CHECK(matching.equality_certified_extremal == true);

  // at t = 3 the bound is tight for every triangle-free regular graph
  const BoundReport petersen3 = check_kahn_coefficient(make("petersen"), 3);
  CHECK(petersen3.lhs == 30);
  CHECK(petersen3.equality);
  CHECK(petersen3.equality_certified_extremal == false);
  const BoundReport petersen4 = check_kahn_coefficient(make("petersen"), 4);
  CHECK(petersen4.holds);
  CHECK_FALSE(petersen4.equality);
  CHECK(petersen4.scope == BoundScope::Theorem);

  for (int r = 1; r <= 3; ++r) {
    const Graph g = build_named({named::CompleteBipartite{r, r}});
    for (int t = 0; t <= 2 * r; ++t) {
      CHECK(check_kahn_coefficient(g, t).equality);
    }
  }
  CHECK_THROWS_AS(check_kahn_coefficient(testing::k13(), 2), std::invalid_argument);
  CHECK_THROWS_AS(check_kahn_coefficient(make("empty:4"), 2), std::invalid_argument);
}

TEST_CASE("coefficient bound outside the proven range") {
  const BoundReport r = check_kahn_coefficient(make("petersen"), 5);
  CHECK(r.scope == BoundScope::Conjecture);
  CHECK(r.rhs == -8);
  CHECK_FALSE(r.holds);
  CHECK(check_kahn_coefficient(make("petersen"), 6).scope == BoundScope::None);
}

TEST_CASE("total-count bound for regular graphs") {
  const BoundReport k33 = check_zhao_total(make("krr-copies:2,3"));
  CHECK(k33.equality);
  CHECK(k33.equality_certified_extremal == true);
  const BoundReport petersen = check_zhao_total(make("petersen"));
  CHECK(petersen.holds);
  CHECK_FALSE(petersen.equality);
  CHECK(certificate(petersen, "i") == 76);
}

TEST_CASE("audit over small corpora") {
  AuditOptions options;
  options.kahn = true;
  options.t_max = 3;
  GraphFilter regular;
  regular.regular_only = true;
  const AuditSummary s = audit_corpus(generate_small_graphs({6, 1, regular}), options);
  CHECK(s.violations == 0);
  CHECK(s.graphs > 0);
  CHECK(s.reports == s.strict + s.equality + s.hypothesis_not_met + s.violations + s.discoveries);

  AuditOptions eg;
  eg.engbers_galvin = true;
  eg.t_min = 3;
  eg.t_max = 5;
  const AuditSummary e = audit_corpus(generate_small_graphs({6, 1, {}}), eg);
  CHECK(e.violations == 0);

  const AuditSummary empty = audit_corpus([]() { return std::optional<Graph>{}; }, eg);
  CHECK(empty.graphs == 0);
  CHECK(empty.reports == 0);
}

TEST_CASE("audit emits reports in corpus order and sorts discoveries") {
  std::vector<Graph> corpus{make("petersen"), make("krr-copies:1,3"), make("petersen")};
  std::size_t next = 0;
  GraphStream stream = [&]() -> std::optional<Graph> {
    if (next == corpus.size()) {
      return std::nullopt;
    }
    return corpus[next++];
  };
  AuditOptions options;
  options.kahn = true;
  options.t_min = 5;
  options.t_max = 5;
  std::vector<std::string> order;
  const AuditSummary s = audit_corpus(stream, options, [&](const BoundReport& r) { order.push_back(r.graph_id); });
  CHECK(order.size() == 3);
  CHECK(order[0] == order[2]);
  CHECK(s.discoveries == 2);
  CHECK(s.violations == 0);
  CHECK(s.discovery_reports[0].graph_id == s.discovery_reports[1].graph_id);
}
