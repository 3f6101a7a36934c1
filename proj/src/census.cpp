#include "indsieve/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "indsieve/subsets.hpp"

namespace indsieve {

Pattern4 classify_four(const std::uint64_t* local) {
  std::array<int, 4> degree{};
  int twice_edges = 0;
  for (int i = 0; i < 4; ++i) {
    degree[static_cast<std::size_t>(i)] = std::popcount(local[i] & 0xFU);
    twice_edges += degree[static_cast<std::size_t>(i)];
  }
  std::sort(degree.begin(), degree.end());
  if (degree[0] == 0) {
    return Pattern4::WithIsolated;
  }
  switch (twice_edges / 2) {
    case 2:
      return Pattern4::K2UK2;
    case 3:
      return degree[3] == 3 ? Pattern4::K13 : Pattern4::P4;
    case 4:
      return degree[3] == 3 ? Pattern4::R42 : Pattern4::C4;
    case 5:
      return Pattern4::R41;
    default:
      return Pattern4::K4;
  }
}

namespace {

struct Tally {
  std::array<std::uint64_t, 11> counts{};  // k3 p3 | k13 p4 k2uk2 c4 r42 r41 k4 | c5 | spare

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      counts[i] += other.counts[i];
    }
  }
};

constexpr std::size_t kK3 = 0, kP3 = 1, kFourBase = 2, kC5 = 9;

void tally_three(Tally& tally, const kernels::SubsetView& s) {
  const int edges = (std::popcount(s.local[0]) + std::popcount(s.local[1]) + std::popcount(s.local[2])) / 2;
  tally.counts[edges == 3 ? kK3 : kP3] += 1;
}

void tally_four(Tally& tally, const kernels::SubsetView& s) {
  const Pattern4 pattern = classify_four(s.local.data());
  if (pattern != Pattern4::WithIsolated) {
    tally.counts[kFourBase + static_cast<std::size_t>(pattern)] += 1;
  }
}

void tally_five(Tally& tally, const kernels::SubsetView& s) {
  for (int i = 0; i < 5; ++i) {
    if (std::popcount(s.local[static_cast<std::size_t>(i)]) != 2) {
      return;
    }
  }
  // 2-regular on five vertices can only be the pentagon
  tally.counts[kC5] += 1;
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

Census from_tally(const Tally& t, int up_to) {
  Census c;
  c.up_to = up_to;
  c.k3 = big(t.counts[kK3]);
  c.p3 = big(t.counts[kP3]);
  c.k13 = big(t.counts[kFourBase + static_cast<std::size_t>(Pattern4::K13)]);
  c.p4 = big(t.counts[kFourBase + static_cast<std::size_t>(Pattern4::P4)]);
  c.k2uk2 = big(t.counts[kFourBase + static_cast<std::size_t>(Pattern4::K2UK2)]);
  c.c4 = big(t.counts[kFourBase + static_cast<std::size_t>(Pattern4::C4)]);
  c.r42 = big(t.counts[kFourBase + static_cast<std::size_t>(Pattern4::R42)]);
  c.r41 = big(t.counts[kFourBase + static_cast<std::size_t>(Pattern4::R41)]);
  c.k4 = big(t.counts[kFourBase + static_cast<std::size_t>(Pattern4::K4)]);
  c.c5 = big(t.counts[kC5]);
  return c;
}

void check_depth(int up_to) {
  if (up_to < 3 || up_to > 5) {
    throw std::invalid_argument("census depth must be 3, 4 or 5");
  }
}

// Pentagons through each edge vw: choose x ~ v and y ~ w (outside the edge)
// and a common neighbor z of x and y. With girth >= 5 every such 5-cycle is
// induced and the closing vertex is never v or w. Each pentagon is seen once
// per edge, i.e. five times.
BigInt pentagons_per_edge(const Graph& g) {
  std::uint64_t total = 0;
  const std::size_t words = g.words_per_row();
  for (const Edge& e : g.edges()) {
    const auto rv = g.neighbors(e.u);
    const auto rw = g.neighbors(e.v);
    for (std::size_t a = 0; a < words; ++a) {
      for (std::uint64_t xb = rv[a]; xb != 0; xb &= xb - 1) {
        const auto x = static_cast<Vertex>(a * 64 + static_cast<std::size_t>(std::countr_zero(xb)));
        if (x == e.v) {
          continue;
        }
        const auto rx = g.neighbors(x);
        for (std::size_t b = 0; b < words; ++b) {
          for (std::uint64_t yb = rw[b]; yb != 0; yb &= yb - 1) {
            const auto y = static_cast<Vertex>(b * 64 + static_cast<std::size_t>(std::countr_zero(yb)));
            if (y == e.u || y == x) {
              continue;
            }
            const auto ry = g.neighbors(y);
            for (std::size_t c = 0; c < words; ++c) {
              total += static_cast<std::uint64_t>(std::popcount(rx[c] & ry[c]));
            }
          }
        }
      }
    }
  }
  return big(total) / 5;
}

}  // namespace

Census full_census(const Graph& g, int up_to) {
  check_depth(up_to);
  auto merge = [](Tally& into, const Tally& part) { into.merge(part); };
  Tally tally = kernels::reduce_covered_subsets(g, 3, Tally{}, tally_three, merge);
  if (up_to >= 4) {
    tally.merge(kernels::reduce_covered_subsets(g, 4, Tally{}, tally_four, merge));
  }
  if (up_to >= 5) {
    tally.merge(kernels::reduce_covered_subsets(g, 5, Tally{}, tally_five, merge));
  }
  Census census = from_tally(tally, up_to);
  if (up_to >= 5) {
    const auto gi = girth(g);
    if (!gi || *gi >= 5) {
      census.c5_per_edge = pentagons_per_edge(g);
      if (*census.c5_per_edge != census.c5) {
        throw std::logic_error("pentagon census paths disagree");
      }
    }
  }
  return census;
}

Census full_census_reference(const Graph& g, int up_to) {
  check_depth(up_to);
  Tally tally = kernels::reduce_covered_subsets_reference(g, 3, Tally{}, tally_three);
  if (up_to >= 4) {
    tally.merge(kernels::reduce_covered_subsets_reference(g, 4, Tally{}, tally_four));
  }
  if (up_to >= 5) {
    tally.merge(kernels::reduce_covered_subsets_reference(g, 5, Tally{}, tally_five));
  }
  return from_tally(tally, up_to);
}

const char* to_string(IdentityStatus status) {
  switch (status) {
    case IdentityStatus::Holds:
      return "holds";
    case IdentityStatus::Violated:
      return "violated";
    case IdentityStatus::NotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

BigInt degree_binomial_sum(const Graph& g, int k) {
  BigInt sum = 0;
  for (int d : g.degrees()) {
    sum += binomial(d, k);
  }
  return sum;
}

namespace {

IdentityCheck evaluate(std::string name, BigInt lhs, BigInt rhs) {
  IdentityCheck check{std::move(name), std::move(lhs), std::move(rhs), IdentityStatus::Holds, {}};
  if (check.lhs != check.rhs) {
    check.status = IdentityStatus::Violated;
  }
  return check;
}

IdentityCheck not_applicable(std::string name, std::string why) {
  return {std::move(name), 0, 0, IdentityStatus::NotApplicable, std::move(why)};
}

}  // namespace

std::vector<IdentityCheck> census_identities(const Graph& g, const Census& c) {
  std::vector<IdentityCheck> out;
  out.push_back(evaluate("degree_pairs: sum C(d,2) = p3 + 3 k3", degree_binomial_sum(g, 2), c.p3 + 3 * c.k3));

  const char* triples = "degree_triples: sum C(d,3) = k13 + r42 + 2 r41 + 4 k4";
  if (c.has(4)) {
    out.push_back(evaluate(triples, degree_binomial_sum(g, 3), c.k13 + c.r42 + 2 * c.r41 + 4 * c.k4));
  } else {
    out.push_back(not_applicable(triples, "census depth < 4"));
  }

  const auto gi = girth(g);
  const bool girth_at_least_5 = !gi || *gi >= 5;
  const char* pairs = "edge_pairs: C(m,2) = k2uk2 + p3 + p4";
  if (!c.has(4)) {
    out.push_back(not_applicable(pairs, "census depth < 4"));
  } else if (!girth_at_least_5) {
    out.push_back(not_applicable(pairs, "girth < 5"));
  } else {
    out.push_back(evaluate(pairs, binomial(static_cast<long>(g.size()), 2), c.k2uk2 + c.p3 + c.p4));
  }

  const char* paths = "paths_pentagons: p4 = 5 c5";
  if (!c.has(5)) {
    out.push_back(not_applicable(paths, "census depth < 5"));
  } else if (gi != 5 || diameter(g) != 2) {
    out.push_back(not_applicable(paths, "requires girth 5 and diameter 2"));
  } else {
    out.push_back(evaluate(paths, c.p4, 5 * c.c5));
  }
  return out;
}

}  // namespace indsieve
