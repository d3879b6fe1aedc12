#include "coverideal/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "coverideal/coloring.hpp"

namespace coverideal {

namespace {

Monomial all_vertices_monomial(const Hypergraph& h) {
  return Monomial(std::vector<int>(h.vertex_count(), 1));
}

}  // namespace

int chi_algebraic(const Hypergraph& h) {
  const int n = h.vertex_count();
  const MonomialIdeal j = cover_ideal(h);
  const Monomial m_v = all_vertices_monomial(h);
  MonomialIdeal jd = j;
  for (int d = 1; d <= n; ++d) {
    if (jd.contains(m_v.pow(d - 1))) return d;
    jd = multiply(jd, j);
  }
  return n;  // membership holds at d = n at the latest
}

int chi_b_algebraic(const Hypergraph& g, int b) {
  if (!is_graph(g)) throw std::invalid_argument("b-fold invariant requires a graph");
  if (b < 1) throw std::invalid_argument("fold must be positive");
  const int n = g.vertex_count();
  const MonomialIdeal j = cover_ideal(g);
  const Monomial m_v = all_vertices_monomial(g);
  MonomialIdeal jd = power(j, b);
  for (int d = b; d <= b * n; ++d) {
    if (jd.contains(m_v.pow(d - b))) return d;
    jd = multiply(jd, j);
  }
  return b * n;  // b disjoint palettes of an n-coloring always work
}

AssReport dual_of_power(const Hypergraph& h, int s, Budget budget) {
  if (s < 1) throw std::invalid_argument("power must be positive");
  const int n = h.vertex_count();
  if (n > budget.max_n)
    throw BudgetExceeded("dual_of_power: " + std::to_string(n) + " vertices exceed the budget (max_n = " +
                         std::to_string(budget.max_n) + ")");
  if (s > budget.max_s)
    throw BudgetExceeded("dual_of_power: power " + std::to_string(s) + " exceeds the budget (max_s = " +
                         std::to_string(budget.max_s) + ")");

  const std::vector<int> a(n, s);
  const MonomialIdeal js = power(cover_ideal(h), s);
  const MonomialIdeal dual = alexander_dual(js, a);

  AssReport report;
  report.s = s;
  report.dual_generators = dual.generators();
  for (const Monomial& c : report.dual_generators) {
    std::vector<int> b(n, 0);
    for (int i = 0; i < n; ++i)
      if (c.exponents[i] >= 1) b[i] = s + 1 - c.exponents[i];
    report.components.push_back(IrreducibleComponent(std::move(b)));
  }
  for (const IrreducibleComponent& c : report.components) report.primes.push_back(c.support());
  std::sort(report.primes.begin(), report.primes.end());
  report.primes.erase(std::unique(report.primes.begin(), report.primes.end()),
                      report.primes.end());
  return report;
}

std::vector<Monomial> secant_generators(const Hypergraph& h, int s, int degree_cap) {
  if (s < 1) throw std::invalid_argument("secant power must be positive");
  const int n = h.vertex_count();
  if (n > 20) throw std::invalid_argument("secant enumeration limited to 20 vertices");
  const int cap = degree_cap < 0 ? n : degree_cap;

  // subsets in ascending size, so every kept set is inclusion-minimal
  std::vector<std::vector<int>> kept;
  std::vector<std::uint64_t> kept_masks;
  for (int size = 2; size <= cap; ++size) {
    std::vector<int> pick(size);
    std::vector<std::uint64_t> found_this_size;
    auto recurse = [&](auto&& self, int from, int depth) -> void {
      if (depth == size) {
        std::uint64_t mask = 0;
        for (int v : pick) mask |= std::uint64_t{1} << v;
        for (std::uint64_t km : kept_masks)
          if ((km & ~mask) == 0) return;  // contains a smaller generator
        if (chromatic_number(induced(h, pick)) > s) {
          kept.push_back(pick);
          found_this_size.push_back(mask);
        }
        return;
      }
      for (int v = from; v <= n - (size - depth); ++v) {
        pick[depth] = v;
        self(self, v + 1, depth + 1);
      }
    };
    recurse(recurse, 0, 0);
    kept_masks.insert(kept_masks.end(), found_this_size.begin(), found_this_size.end());
  }

  std::vector<Monomial> gens;
  gens.reserve(kept.size());
  for (const std::vector<int>& w : kept) gens.push_back(Monomial::of_support(n, w));
  std::sort(gens.begin(), gens.end());
  return gens;
}

std::optional<std::vector<ExpansionVertex>> expansion_witness(const Hypergraph& h, int s,
                                                              const PrimeSupport& prime) {
  if (s < 1) throw std::invalid_argument("power must be positive");
  if (prime.variables.empty()) throw std::invalid_argument("prime support is empty");
  if (!std::is_sorted(prime.variables.begin(), prime.variables.end()) ||
      std::adjacent_find(prime.variables.begin(), prime.variables.end()) != prime.variables.end())
    throw std::invalid_argument("prime support must be sorted and duplicate-free");
  if (prime.variables.front() < 0 || prime.variables.back() >= h.vertex_count())
    throw std::invalid_argument("prime variable out of range");

  const ExpandedHypergraph exp = expansion(h, s);
  const int r = prime.height();

  // Shadow-permuting automorphisms let the search take shadows consecutively
  // from the first; only the count per base vertex matters.
  std::vector<int> counts(r, 1);
  const auto try_counts = [&]() -> bool {
    std::vector<int> t;
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < counts[k]; ++j) t.push_back(exp.index_of(prime.variables[k], j));
    std::sort(t.begin(), t.end());
    return is_critically_chromatic(induced(exp.expanded, t), s + 1);
  };

  for (int total = r; total <= r * s; ++total) {
    // counts in [1, s]^r with the given total, lexicographically ascending
    const auto enumerate = [&](auto&& self, int pos, int remaining) -> bool {
      if (pos == r) return remaining == 0 && try_counts();
      const int slots_after = r - pos - 1;
      for (int c = 1; c <= s; ++c) {
        if (remaining - c < slots_after || remaining - c > slots_after * s) continue;
        counts[pos] = c;
        if (self(self, pos + 1, remaining - c)) return true;
      }
      return false;
    };
    if (enumerate(enumerate, 0, total)) {
      std::vector<ExpansionVertex> witness;
      for (int k = 0; k < r; ++k)
        for (int j = 0; j < counts[k]; ++j) witness.push_back({prime.variables[k], j});
      return witness;
    }
  }
  return std::nullopt;
}

bool localize_check(const Hypergraph& h, const PrimeSupport& prime, int d) {
  if (d < 1) throw std::invalid_argument("power must be positive");
  const Hypergraph local = induced(h, prime.variables);
  const MonomialIdeal jd = power(cover_ideal(local), d);
  if (jd.is_zero() || jd.is_unit()) return false;
  std::vector<int> full(local.vertex_count());
  for (int i = 0; i < local.vertex_count(); ++i) full[i] = i;
  const std::vector<PrimeSupport> ass = associated_primes(jd);
  return std::binary_search(ass.begin(), ass.end(), PrimeSupport(full));
}

std::vector<std::pair<int, bool>> persistence_scan(const Hypergraph& h, int s_max,
                                                   Budget budget) {
  if (s_max < 1) throw std::invalid_argument("s_max must be positive");
  std::vector<std::vector<PrimeSupport>> primes;
  primes.reserve(s_max);
  for (int s = 1; s <= s_max; ++s) primes.push_back(dual_of_power(h, s, budget).primes);
  std::vector<std::pair<int, bool>> out;
  for (int s = 1; s < s_max; ++s) {
    bool contained = std::includes(primes[s].begin(), primes[s].end(),
                                   primes[s - 1].begin(), primes[s - 1].end());
    out.emplace_back(s, contained);
  }
  return out;
}

StabilizationReport stabilization_union(const Hypergraph& h, int s_max, Budget budget) {
  if (s_max < 1) throw std::invalid_argument("s_max must be positive");
  std::vector<std::vector<PrimeSupport>> unions;
  std::vector<PrimeSupport> acc;
  for (int s = 1; s <= s_max; ++s) {
    for (const PrimeSupport& p : dual_of_power(h, s, budget).primes) acc.push_back(p);
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    unions.push_back(acc);
  }
  StabilizationReport report;
  report.s_max = s_max;
  report.union_primes = unions.back();
  report.stable_from = s_max;
  for (int s = 1; s <= s_max; ++s) {
    if (unions[s - 1] == report.union_primes) {
      report.stable_from = s;
      break;
    }
  }
  return report;
}

}  // namespace coverideal
