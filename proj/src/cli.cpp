#include "indsieve/cli.hpp"

#include <omp.h>

#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indsieve/bounds.hpp"
#include "indsieve/census.hpp"
#include "indsieve/closed_form.hpp"
#include "indsieve/exact.hpp"
#include "indsieve/generate.hpp"
#include "indsieve/graph6.hpp"
#include "indsieve/named.hpp"
#include "indsieve/oracle.hpp"
#include "indsieve/series.hpp"
#include "indsieve/sieve.hpp"

namespace indsieve::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

// Integers below 2^31 in magnitude are JSON numbers, anything larger is a decimal string.
Json big(const BigInt& value) {
  if (abs(value) < BigInt(1L << 31)) {
    return value.get_si();
  }
  return value.get_str();
}

Json rational(const Rational& value) {
  if (value.get_den() == 1) {
    return big(value.get_num());
  }
  return to_fraction_string(value);
}

class Printer {
 public:
  Printer(std::ostream& out, bool tsv) : out_(&out), tsv_(tsv) {}

  void emit(const Json& row) {
    if (!tsv_) {
      *out_ << row.dump() << '\n';
      return;
    }
    if (!header_done_) {
      write_line(row, true);
      header_done_ = true;
    }
    write_line(row, false);
  }

 private:
  static std::string cell(const Json& v) {
    if (v.is_string()) {
      return v.get<std::string>();
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
      std::string joined;
      for (std::size_t i = 0; i < v.size(); ++i) {
        joined += (i ? "," : "") + cell(v[i]);
      }
      return joined;
    }
    return v.dump();
  }

  void write_line(const Json& row, bool header) {
    bool first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      *out_ << (first ? "" : "\t") << (header ? it.key() : cell(it.value()));
      first = false;
    }
    *out_ << '\n';
  }

  std::ostream* out_;
  bool tsv_;
  bool header_done_ = false;
};

struct InputFlags {
  std::string named;
  std::string graph6;
  std::string graph6_file;
};

struct CommonFlags {
  std::string format = "json";
  int threads = 0;
};

void add_input(CLI::App* cmd, InputFlags& input) {
  auto* named = cmd->add_option("--named", input.named, "named graph, e.g. petersen, cycle:5, kbip:3,7, krr-copies:2,3");
  auto* g6 = cmd->add_option("--graph6", input.graph6, "graph6 string");
  auto* file = cmd->add_option("--graph6-file", input.graph6_file, "graph6 file, one graph per line ('-' for stdin)");
  named->excludes(g6)->excludes(file);
  g6->excludes(file);
}

void add_common(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
}

GraphStream reader_stream(std::shared_ptr<std::istream> owner) {
  auto reader = std::make_shared<Graph6Reader>(*owner);
  return [owner, reader]() { return reader->next(); };
}

/// Builds the input stream; stdin is used when no flag names a source.
GraphStream open_input(const InputFlags& input, std::istream& in) {
  if (!input.named.empty()) {
    auto g = std::make_shared<std::optional<Graph>>(build_named(parse_named(input.named)));
    return [g]() { return std::exchange(*g, std::nullopt); };
  }
  if (!input.graph6.empty()) {
    auto g = std::make_shared<std::optional<Graph>>(parse_graph6(input.graph6));
    return [g]() { return std::exchange(*g, std::nullopt); };
  }
  if (!input.graph6_file.empty() && input.graph6_file != "-") {
    auto file = std::make_shared<std::ifstream>(input.graph6_file);
    if (!*file) {
      throw std::runtime_error("cannot open " + input.graph6_file);
    }
    return reader_stream(file);
  }
  std::shared_ptr<std::istream> borrowed(&in, [](std::istream*) {});
  return reader_stream(borrowed);
}

Json census_json(const Graph& g, const Census& c) {
  Json row;
  row["n"] = g.order();
  row["m"] = g.size();
  row["up_to"] = c.up_to;
  row["k3"] = big(c.k3);
  row["p3"] = big(c.p3);
  if (c.has(4)) {
    row["k13"] = big(c.k13);
    row["p4"] = big(c.p4);
    row["k2uk2"] = big(c.k2uk2);
    row["c4"] = big(c.c4);
    row["r42"] = big(c.r42);
    row["r41"] = big(c.r41);
    row["k4"] = big(c.k4);
  }
  if (c.has(5)) {
    row["c5"] = big(c.c5);
  }
  Json checks = Json::array();
  for (const IdentityCheck& check : census_identities(g, c)) {
    checks.push_back({{"name", check.name},
                      {"lhs", big(check.lhs)},
                      {"rhs", big(check.rhs)},
                      {"status", to_string(check.status)},
                      {"note", check.note}});
  }
  row["identities"] = checks;
  return row;
}

Json report_json(const BoundReport& r) {
  Json row;
  row["graph_id"] = r.graph_id;
  row["bound"] = to_string(r.bound);
  row["t"] = r.t ? Json(*r.t) : Json(nullptr);
  row["hypotheses_met"] = r.hypotheses_met;
  Json reasons = Json::object();
  for (const Hypothesis& h : r.hypotheses) {
    reasons[h.name] = h.met;
  }
  row["hypotheses"] = reasons;
  row["scope"] = to_string(r.scope);
  row["lhs"] = big(r.lhs);
  row["rhs"] = rational(r.rhs);
  row["holds"] = r.holds;
  row["equality"] = r.equality;
  row["equality_certified_extremal"] =
      r.equality_certified_extremal ? Json(*r.equality_certified_extremal) : Json(nullptr);
  Json certificate = Json::object();
  for (const auto& [key, value] : r.certificate) {
    certificate[key] = big(value);
  }
  row["certificate"] = certificate;
  return row;
}

Json summary_json(const AuditSummary& s) {
  return {{"graphs", s.graphs},           {"reports", s.reports},
          {"strict", s.strict},           {"equality", s.equality},
          {"hypothesis_not_met", s.hypothesis_not_met}, {"violations", s.violations},
          {"discoveries", s.discoveries}};
}

struct Check {
  std::string name;
  BigInt lhs;
  BigInt rhs;
};

/// Cross-path suite for one graph: sieve against the oracles, closed forms
/// against the census, and the census identities themselves.
Json verify_graph(const Graph& g, int t_max, bool& all_hold) {
  std::vector<Check> checks;
  const SieveTable table = sieve_coefficients(g, t_max);
  std::optional<oracle::IndependencePolynomial> poly;
  if (g.order() <= 40) {
    poly = oracle::independence_polynomial(g, t_max);
  }
  for (int t = 0; t <= t_max; ++t) {
    const BigInt sieve = count_from_sieve(table, t);
    checks.push_back({"i_" + std::to_string(t) + " sieve=brute_force", sieve, oracle::brute_force_it(g, t)});
    if (poly) {
      const auto k = static_cast<std::size_t>(t);
      const BigInt coefficient = k < poly->coefficients.size() ? poly->coefficients[k] : BigInt(0);
      checks.push_back({"i_" + std::to_string(t) + " sieve=polynomial", sieve, coefficient});
    }
  }
  Json identities = Json::array();
  if (g.order() >= 1) {
    const int depth = g.order() >= 5 ? 5 : 4;
    const Census census = full_census(g, depth);
    if (t_max >= 4) {
      const SmallSieveTerms terms = n234_from_census(g, census);
      checks.push_back({"N_2 closed=sieve", terms.n2, table[2]});
      checks.push_back({"N_3 closed=sieve", terms.n3, table[3]});
      checks.push_back({"N_4 closed=sieve", terms.n4, table[4]});
      checks.push_back({"i_3 closed=brute_force", i3_identity(g, census).i3, oracle::brute_force_it(g, 3)});
      checks.push_back({"i_4 closed=brute_force", i4_identity(g, census).i4, oracle::brute_force_it(g, 4)});
    }
    std::vector<IdentityCheck> all = census_identities(g, census);
    const MooreStructureReport moore = moore_structure_identities(g);
    if (moore.applicable) {
      all.insert(all.end(), moore.identities.begin(), moore.identities.end());
    }
    for (const IdentityCheck& c : all) {
      if (c.status == IdentityStatus::Violated) {
        all_hold = false;
      }
      identities.push_back({{"name", c.name}, {"lhs", big(c.lhs)}, {"rhs", big(c.rhs)}, {"status", to_string(c.status)}});
    }
  }
  Json rows = Json::array();
  for (const Check& c : checks) {
    const bool ok = c.lhs == c.rhs;
    all_hold = all_hold && ok;
    rows.push_back({{"name", c.name}, {"lhs", big(c.lhs)}, {"rhs", big(c.rhs)}, {"status", ok ? "holds" : "violated"}});
  }
  Json row;
  row["n"] = g.order();
  row["m"] = g.size();
  row["t_max"] = t_max;
  row["checks"] = rows;
  row["identities"] = identities;
  row["all_hold"] = all_hold;
  return row;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact independent-set counting and bound checks"};
  app.require_subcommand(1);

  InputFlags input;
  CommonFlags common;

  auto* count = app.add_subcommand("count", "i_t via the sieve");
  int count_t = 0;
  bool count_check = false;
  count->add_option("--t", count_t, "set size")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--check", count_check, "also run the brute-force oracle");

  auto* sieve = app.add_subcommand("sieve", "sieve coefficients N_0..N_T");
  std::optional<int> sieve_tmax;
  sieve->add_option("--tmax", sieve_tmax, "largest j (default n)")->check(CLI::NonNegativeNumber);

  auto* census = app.add_subcommand("census", "induced-subgraph census");
  int census_depth = 4;
  census->add_option("--up-to", census_depth, "largest pattern size")->check(CLI::Range(3, 5));

  auto* moore = app.add_subcommand("moore", "counts for girth-5 diameter-2 r-regular graphs");
  int moore_r = 0;
  moore->add_option("--r", moore_r, "degree: 2, 3, 7 or 57")->required();

  auto* series = app.add_subcommand("series", "[x^t](2(1+x)^r - 1)^(n/2r)");
  int series_r = 0;
  long series_n = 0;
  int series_t = 0;
  series->add_option("--r", series_r)->required()->check(CLI::PositiveNumber);
  series->add_option("--n", series_n)->required()->check(CLI::NonNegativeNumber);
  series->add_option("--t", series_t)->required()->check(CLI::NonNegativeNumber);

  auto* audit = app.add_subcommand("audit", "check bounds over a corpus");
  std::string suite = "all";
  std::optional<int> nmax;
  int nmin = 1;
  int t_min = 0;
  int t_max = 4;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  bool summary_only = false;
  audit->add_option("--suite", suite)->check(CLI::IsMember({"eg", "cr", "kahn", "zhao", "all"}));
  audit->add_option("--nmax", nmax, "largest order")->check(CLI::PositiveNumber);
  audit->add_option("--nmin", nmin, "smallest order")->check(CLI::PositiveNumber);
  audit->add_option("--t-min", t_min)->check(CLI::NonNegativeNumber);
  audit->add_option("--t-max", t_max)->check(CLI::NonNegativeNumber);
  audit->add_option("--seed", seed);
  audit->add_option("--samples", samples, "sample this many random graphs instead of enumerating");
  audit->add_flag("--summary-only", summary_only, "print only the summary");

  auto* oracle_cmd = app.add_subcommand("oracle", "independence polynomial by brute force");
  std::optional<int> oracle_t;
  oracle_cmd->add_option("--t", oracle_t, "also count size-t sets directly")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "cross-check sieve, oracle and closed forms");
  std::optional<int> verify_tmax;
  verify->add_option("--tmax", verify_tmax, "largest t (default min(n, 4))")->check(CLI::NonNegativeNumber);

  for (auto* cmd : {count, sieve, census, oracle_cmd, verify, audit}) {
    add_input(cmd, input);
  }
  for (auto* cmd : {count, sieve, census, moore, series, audit, oracle_cmd, verify}) {
    add_common(cmd, common);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (common.threads > 0) {
    omp_set_num_threads(common.threads);
  }
  Printer printer(out, common.format == "tsv");

  try {
    if (*moore) {
      const MooreParams params(moore_r);
      const MooreCounts counts = moore_counts(params);
      Json row;
      row["r"] = params.degree();
      row["n"] = params.order();
      row["m"] = params.size();
      row["c5"] = big(counts.c5);
      row["c5_factors"] = format_factorization(factorize(counts.c5));
      row["i3"] = big(counts.i3);
      row["i3_factors"] = format_factorization(factorize(counts.i3));
      row["i4"] = big(counts.i4);
      row["i4_factors"] = format_factorization(factorize(counts.i4));
      printer.emit(row);
      return kExitOk;
    }
    if (*series) {
      const Rational c = kahn_bound_coefficient(series_n, series_r, series_t);
      printer.emit({{"r", series_r},
                    {"n", series_n},
                    {"t", series_t},
                    {"coefficient", to_fraction_string(c)},
                    {"decimal", to_decimal_string(c)}});
      return kExitOk;
    }
    if (*audit) {
      AuditOptions options;
      options.engbers_galvin = suite == "eg" || suite == "all";
      options.cutler_radcliffe = suite == "cr" || suite == "all";
      options.kahn = suite == "kahn" || suite == "all";
      options.zhao = suite == "zhao" || suite == "all";
      options.t_min = t_min;
      options.t_max = t_max;
      GraphFilter filter;
      filter.regular_only = suite == "kahn" || suite == "zhao";
      const bool named_input = !input.named.empty() || !input.graph6.empty() || !input.graph6_file.empty();
      GraphStream corpus;
      if (named_input) {
        if (nmax || samples) {
          throw CLI::ValidationError("audit", "--nmax/--samples cannot be combined with an input graph");
        }
        corpus = open_input(input, in);
      } else if (!nmax) {
        throw CLI::ValidationError("audit", "needs --nmax or an input graph");
      } else if (samples) {
        SamplingOptions sampling;
        sampling.n_min = std::min(nmin, *nmax);
        sampling.n_max = *nmax;
        sampling.samples = *samples;
        sampling.seed = seed;
        sampling.filter = filter;
        corpus = sample_random_graphs(sampling);
      } else {
        corpus = generate_small_graphs({*nmax, std::min(nmin, *nmax), filter});
      }
      std::function<void(const BoundReport&)> sink;
      if (!summary_only) {
        sink = [&printer](const BoundReport& r) { printer.emit(report_json(r)); };
      }
      const AuditSummary summary = audit_corpus(corpus, options, sink);
      if (summary_only) {
        printer.emit(summary_json(summary));
      } else {
        err << summary_json(summary).dump() << '\n';
      }
      return summary.violations == 0 ? kExitOk : kExitViolation;
    }

    GraphStream graphs = open_input(input, in);
    int status = kExitOk;
    while (auto g = graphs()) {
      if (*count) {
        const BigInt value = it_via_sieve(*g, count_t);
        Json row{{"i_t", big(value)}};
        if (count_check) {
          const BigInt brute = oracle::brute_force_it(*g, count_t);
          row["oracle"] = big(brute);
          row["agree"] = brute == value;
          if (brute != value) {
            status = kExitViolation;
          }
        }
        printer.emit(row);
      } else if (*sieve) {
        const SieveTable table = sieve_coefficients(*g, sieve_tmax.value_or(g->order()));
        Json values = Json::array();
        for (const BigInt& v : table.coefficients) {
          values.push_back(big(v));
        }
        printer.emit({{"n", table.n}, {"t_max", table.t_max}, {"N", values}});
      } else if (*census) {
        printer.emit(census_json(*g, full_census(*g, census_depth)));
      } else if (*oracle_cmd) {
        const oracle::IndependencePolynomial poly = oracle::independence_polynomial(*g);
        Json coefficients = Json::array();
        for (const BigInt& c : poly.coefficients) {
          coefficients.push_back(big(c));
        }
        Json row{{"n", g->order()},
                 {"m", g->size()},
                 {"polynomial", coefficients},
                 {"total", big(poly.total())},
                 {"alpha", poly.independence_number()}};
        if (oracle_t) {
          row["i_t"] = big(oracle::brute_force_it(*g, *oracle_t));
        }
        printer.emit(row);
      } else if (*verify) {
        bool all_hold = true;
        const int limit = std::min(verify_tmax.value_or(4), g->order());
        printer.emit(verify_graph(*g, limit, all_hold));
        if (!all_hold) {
          status = kExitViolation;
        }
      }
    }
    return status;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace indsieve::cli
