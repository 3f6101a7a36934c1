#include "indsieve/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace indsieve::oracle {

namespace {

// Independent t-sets inside `candidates` (n <= 64).
std::uint64_t count_in_mask(const Graph& g, std::uint64_t candidates, int t) {
  if (t == 0) {
    return 1;
  }
  if (std::popcount(candidates) < t) {
    return 0;
  }
  if (t == 1) {
    return static_cast<std::uint64_t>(std::popcount(candidates));
  }
  std::uint64_t total = 0;
  while (std::popcount(candidates) >= t) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    total += count_in_mask(g, candidates & ~g.neighbor_mask(v), t - 1);
  }
  return total;
}

// General order: extend ascending chosen lists and test adjacency directly.
struct WideCounter {
  const Graph& g;
  int t;
  std::vector<Vertex> chosen;

  std::uint64_t extend(Vertex start) {
    const int depth = static_cast<int>(chosen.size());
    if (depth == t) {
      return 1;
    }
    std::uint64_t total = 0;
    for (Vertex v = start; v <= g.order() - (t - depth); ++v) {
      const bool free = std::none_of(chosen.begin(), chosen.end(), [&](Vertex u) { return g.adjacent(u, v); });
      if (free) {
        chosen.push_back(v);
        total += extend(v + 1);
        chosen.pop_back();
      }
    }
    return total;
  }
};

// Independent t-sets whose smallest vertex is `first`.
std::uint64_t count_from(const Graph& g, int t, Vertex first) {
  if (t <= 0 || first + t > g.order()) {
    return 0;
  }
  if (g.order() <= 64) {
    const int n = g.order();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t above = all & ~((std::uint64_t{2} << first) - 1);
    return count_in_mask(g, above & ~g.neighbor_mask(first), t - 1);
  }
  WideCounter counter{g, t, {first}};
  return counter.extend(first + 1);
}

}  // namespace

BigInt brute_force_it(const Graph& g, int t) {
  if (t < 0 || t > g.order()) {
    return 0;
  }
  if (t == 0) {
    return 1;
  }
  const int n = g.order();
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic, 1) if (n >= 24)
  for (Vertex first = 0; first < n; ++first) {
    parts[static_cast<std::size_t>(first)] = count_from(g, t, first);
  }
  BigInt total = 0;
  for (std::uint64_t part : parts) {
    total += BigInt(static_cast<unsigned long>(part));
  }
  return total;
}

BigInt brute_force_it_serial(const Graph& g, int t) {
  if (t < 0 || t > g.order()) {
    return 0;
  }
  if (t == 0) {
    return 1;
  }
  BigInt total = 0;
  for (Vertex first = 0; first < g.order(); ++first) {
    total += BigInt(static_cast<unsigned long>(count_from(g, t, first)));
  }
  return total;
}

BigInt IndependencePolynomial::total() const {
  BigInt sum = 0;
  for (const BigInt& c : coefficients) {
    sum += c;
  }
  return sum;
}

namespace {

using Poly = std::vector<BigInt>;
using Words = std::vector<std::uint64_t>;

struct WordsHash {
  std::size_t operator()(const std::pair<Words, int>& key) const {
    std::size_t h = std::hash<int>{}(key.second);
    for (std::uint64_t w : key.first) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void add_shifted(Poly& into, const Poly& from, std::size_t shift, int budget) {
  const std::size_t limit = static_cast<std::size_t>(budget) + 1;
  for (std::size_t i = 0; i < from.size() && i + shift < limit; ++i) {
    if (into.size() <= i + shift) {
      into.resize(i + shift + 1, 0);
    }
    into[i + shift] += from[i];
  }
}

class PolynomialSolver {
 public:
  explicit PolynomialSolver(const Graph& g) : g_(g), words_(g.words_per_row()) {}

  Poly solve(const Words& set, int budget) {
    if (budget == 0) {
      return {1};
    }
    int size = 0;
    for (std::uint64_t w : set) {
      size += std::popcount(w);
    }
    if (size == 0) {
      return {1};
    }
    auto key = std::make_pair(set, budget);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }

    Vertex pivot = -1;
    int pivot_degree = -1;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = set[w]; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        const auto row = g_.neighbors(v);
        int degree = 0;
        for (std::size_t x = 0; x < words_; ++x) {
          degree += std::popcount(row[x] & set[x]);
        }
        if (degree > pivot_degree) {
          pivot = v;
          pivot_degree = degree;
        }
      }
    }

    Poly result;
    if (pivot_degree == 0) {
      // edgeless: (1 + x)^size
      const int top = std::min(size, budget);
      for (int i = 0; i <= top; ++i) {
        result.push_back(binomial(size, i));
      }
    } else {
      Words without = set;
      without[static_cast<std::size_t>(pivot) >> 6] &= ~(std::uint64_t{1} << (pivot & 63));
      Words closed = without;
      const auto row = g_.neighbors(pivot);
      for (std::size_t x = 0; x < words_; ++x) {
        closed[x] &= ~row[x];
      }
      result = solve(without, budget);
      add_shifted(result, solve(closed, budget - 1), 1, budget);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const Graph& g_;
  std::size_t words_;
  std::unordered_map<std::pair<Words, int>, Poly, WordsHash> memo_;
};

}  // namespace

IndependencePolynomial independence_polynomial(const Graph& g, std::optional<int> max_degree) {
  const int budget = max_degree ? std::min(*max_degree, g.order()) : g.order();
  if (budget < 0) {
    throw std::invalid_argument("independence_polynomial: negative max degree");
  }
  Words all(g.words_per_row(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    all[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  PolynomialSolver solver(g);
  IndependencePolynomial poly{solver.solve(all, budget)};
  while (poly.coefficients.size() > 1 && poly.coefficients.back() == 0) {
    poly.coefficients.pop_back();
  }
  return poly;
}

PsiValue brute_force_psi(const Graph& g, std::span<const Vertex> subset) {
  const InducedSubgraph sub = induced_subgraph(g, subset);
  const auto edges = sub.graph.edges();
  if (edges.size() > static_cast<std::size_t>(kBruteForcePsiEdgeLimit)) {
    throw std::length_error("brute_force_psi: G[J] has " + std::to_string(edges.size()) +
                            " edges (limit 24); use the sieve's psi() instead");
  }
  const int k = sub.graph.order();
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  std::vector<int> hit(static_cast<std::size_t>(k));
  for (std::uint64_t chosen = 0; chosen < subsets; ++chosen) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (((chosen >> e) & 1U) != 0) {
        hit[static_cast<std::size_t>(edges[e].u)] = 1;
        hit[static_cast<std::size_t>(edges[e].v)] = 1;
      }
    }
    if (std::all_of(hit.begin(), hit.end(), [](int h) { return h != 0; })) {
      (std::popcount(chosen) % 2 == 0 ? even : odd) += 1;
    }
  }
  PsiValue result;
  result.value = static_cast<std::int64_t>(even) - static_cast<std::int64_t>(odd);
  result.even_covers = even;
  result.odd_covers = odd;
  return result;
}

}  // namespace indsieve::oracle
