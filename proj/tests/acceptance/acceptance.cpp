// Acceptance gate: one self-contained check per release criterion, each with
// a wall-clock limit. Run with no arguments for the full gate, --list to see
// the criteria, --criterion N for a single one. Exit status 0 means every
// selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "coverideal/coloring.hpp"
#include "coverideal/covers.hpp"
#include "coverideal/hypergraph.hpp"
#include "coverideal/invariants.hpp"
#include "coverideal/monomial.hpp"
#include "coverideal/perfect.hpp"
#include "oracles.hpp"

using namespace coverideal;
using namespace coverideal::testing;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    log << "    " << what << "\n";
  }
};

Hypergraph g6() {
  return Hypergraph(6, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {3, 5}});
}

PrimeSupport full_support(int n) {
  std::vector<int> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = i;
  return PrimeSupport(std::move(vars));
}

bool has_prime(const std::vector<PrimeSupport>& primes, const PrimeSupport& p) {
  return std::binary_search(primes.begin(), primes.end(), p);
}

std::vector<int> max_exponents(const MonomialIdeal& ideal) {
  std::vector<int> a(ideal.ambient(), 0);
  for (const auto& g : ideal.generators())
    for (int i = 0; i < ideal.ambient(); ++i) a[i] = std::max(a[i], g.exponents[i]);
  return a;
}

// all cliques of g with size in [lo, hi], as sorted prime supports
std::vector<PrimeSupport> cliques_between(const Hypergraph& g, int lo, int hi) {
  int n = g.vertex_count();
  std::vector<PrimeSupport> cliques;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1u) vars.push_back(v);
    int size = static_cast<int>(vars.size());
    if (size < lo || size > hi) continue;
    if (is_clique(g, vars)) cliques.emplace_back(vars);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::vector<Hypergraph> all_graphs_up_to(int n) {
  std::vector<Hypergraph> graphs;
  for (int k = 1; k <= n; ++k) {
    auto batch = all_graphs(k);
    graphs.insert(graphs.end(), batch.begin(), batch.end());
  }
  return graphs;
}

std::string describe(const Hypergraph& h) {
  std::ostringstream out;
  out << "n=" << h.vertex_count() << " edges={";
  for (std::size_t e = 0; e < h.edges().size(); ++e) {
    if (e) out << ",";
    out << "{";
    for (std::size_t k = 0; k < h.edges()[e].size(); ++k) {
      if (k) out << " ";
      out << h.edges()[e][k];
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

// 1. membership route vs search route for the chromatic number
bool criterion_chi(Check& c) {
  auto graphs = connected_graphs_up_to(6);
  c.expect(graphs.size() == 143, "expected 143 connected graphs up to 6 vertices, got " +
                                     std::to_string(graphs.size()));
  for (const auto& g : graphs)
    c.expect(chi_algebraic(g) == chromatic_number(g), "chi mismatch on " + describe(g));
  std::mt19937 rng(20260819);
  std::uniform_int_distribution<int> n_dist(2, 6);
  std::uniform_int_distribution<int> e_dist(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    Hypergraph h = random_hypergraph(rng, n_dist(rng), e_dist(rng), 3);
    c.expect(chi_algebraic(h) == chromatic_number(h), "chi mismatch on " + describe(h));
  }
  return c.ok;
}

// 2. two-fold chromatic numbers through ideal membership
bool criterion_b_fold(Check& c) {
  Hypergraph c5 = cycle_graph(5);
  c.expect(chi_b_algebraic(c5, 2) == 5, "two-fold chromatic number of the five-cycle");
  MonomialIdeal j = cover_ideal(c5);
  Monomial all = Monomial::of_support(5, {0, 1, 2, 3, 4});
  c.expect(power(j, 5).contains(all.pow(3)), "(x1..x5)^3 lies in the fifth power");
  for (const auto& g : all_graphs_up_to(5))
    c.expect(chi_b_algebraic(g, 2) == b_fold_chromatic(g, 2),
             "two-fold mismatch on " + describe(g));
  return c.ok;
}

// 3. the six-vertex example, end to end
bool criterion_six_vertex(Check& c) {
  Hypergraph h = g6();
  c.expect(chi_algebraic(h) == 3, "chromatic number is 3");

  PrimeSupport maximal = full_support(6);
  c.expect(!has_prime(dual_of_power(h, 1).primes, maximal),
           "maximal ideal absent at the first power");
  c.expect(!has_prime(dual_of_power(h, 2).primes, maximal),
           "maximal ideal absent at the second power");
  auto third = dual_of_power(h, 3);
  c.expect(has_prime(third.primes, maximal), "maximal ideal present at the third power");

  bool component_found = false;
  for (const auto& comp : third.components)
    component_found = component_found || comp == IrreducibleComponent({3, 2, 3, 3, 3, 3});
  c.expect(component_found, "component (x1^3,x2^2,x3^3,x4^3,x5^3,x6^3) in the decomposition");

  auto witness = expansion_witness(h, 3, maximal);
  c.expect(witness.has_value(), "witness set exists at the third power");
  if (witness.has_value()) {
    std::vector<ExpansionVertex> expected{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
    c.expect(*witness == expected, "witness set is x1_1 x2_1 x2_2 x3_1 x4_1 x5_1 x6_1");
    ExpandedHypergraph e = expansion(h, 3);
    std::vector<int> indices;
    for (const auto& v : *witness) indices.push_back(e.index_of(v.base, v.shadow));
    c.expect(is_critically_chromatic(induced(e.expanded, indices), 4),
             "witness set is critically 4-chromatic");
  }

  auto stab = stabilization_union(h, 4);
  c.expect(stab.stable_from >= 3, "associated primes keep growing through the third power");
  c.expect(stab.stable_from > chi_algebraic(h) - 1, "stabilization after chi - 1");
  return c.ok;
}

// 4. duality involution, decomposition, and the two associated-prime routes
bool criterion_duality(Check& c) {
  std::mt19937 rng(20260820);
  std::uniform_int_distribution<int> n_dist(1, 4);
  std::uniform_int_distribution<int> g_dist(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = n_dist(rng);
    MonomialIdeal ideal(n, random_ideal(rng, n, 3, g_dist(rng)));
    std::vector<int> a = max_exponents(ideal);
    std::string name = "trial " + std::to_string(trial);

    MonomialIdeal dual = alexander_dual(ideal, a);
    c.expect(alexander_dual(dual, a) == ideal, name + ": dual is an involution");

    auto components = irreducible_decomposition(ideal);
    MonomialIdeal meet = MonomialIdeal::unit(n);
    for (const auto& comp : components) meet = intersect(meet, irreducible_ideal(n, comp));
    c.expect(meet == ideal, name + ": decomposition intersects back to the ideal");
    for (std::size_t skip = 0; skip < components.size(); ++skip) {
      MonomialIdeal partial = MonomialIdeal::unit(n);
      for (std::size_t k = 0; k < components.size(); ++k)
        if (k != skip) partial = intersect(partial, irreducible_ideal(n, components[k]));
      c.expect(partial != ideal, name + ": decomposition is irredundant");
    }

    c.expect(associated_primes(ideal) == associated_primes_witness(ideal, a),
             name + ": decomposition route matches the colon-witness route");
  }
  return c.ok;
}

// 5. perfection: brute force vs the associated-prime characterization
bool criterion_perfection(Check& c) {
  Budget budget{6, 8};
  for (const auto& g : connected_graphs_up_to(6)) {
    auto brute = is_perfect_bruteforce(g);
    auto algebraic = is_perfect_algebraic(g, budget);
    c.expect(brute.perfect == algebraic.perfect, "verdict mismatch on " + describe(g));
    int chi = chromatic_number(g);
    MonomialIdeal j = cover_ideal(g);
    if (brute.perfect) {
      for (int s = 1; s <= chi + 1; ++s)
        c.expect(dual_of_power(g, s, budget).primes == cliques_between(g, 2, s + 1),
                 "clique classification at power " + std::to_string(s) + " on " + describe(g));
      for (int s = 1; s <= chi - 1; ++s)
        c.expect(saturated_chain_check(power(j, s)).holds,
                 "saturated chain at power " + std::to_string(s) + " on " + describe(g));
    } else {
      bool some_break = false;
      for (int s = 1; s <= chi - 1; ++s)
        some_break = some_break || !saturated_chain_check(power(j, s)).holds;
      c.expect(some_break, "no saturated-chain failure up to chi-1 on " + describe(g));
    }
  }
  return c.ok;
}

// 6. persistence of associated primes; odd holes and antiholes
bool criterion_persistence(Check& c) {
  Budget budget{7, 5};
  Hypergraph c5 = cycle_graph(5);
  PrimeSupport max5 = full_support(5);
  c.expect(!has_prime(dual_of_power(c5, 1, budget).primes, max5),
           "five-cycle: maximal ideal absent at the first power");
  for (int t = 2; t <= 4; ++t)
    c.expect(has_prime(dual_of_power(c5, t, budget).primes, max5),
             "five-cycle: maximal ideal present at power " + std::to_string(t));

  Hypergraph anti = complement(cycle_graph(7));
  PrimeSupport max7 = full_support(7);
  c.expect(chromatic_number(anti) == 4, "odd antihole needs four colors");
  for (int t = 1; t <= 2; ++t)
    c.expect(!has_prime(dual_of_power(anti, t, budget).primes, max7),
             "antihole: maximal ideal absent at power " + std::to_string(t));
  for (int t = 3; t <= 4; ++t)
    c.expect(has_prime(dual_of_power(anti, t, budget).primes, max7),
             "antihole: maximal ideal present at power " + std::to_string(t));

  for (const auto& g : connected_graphs_up_to(6)) {
    if (!is_perfect_bruteforce(g).perfect) continue;
    for (const auto& [s, contained] : persistence_scan(g, 4, budget))
      c.expect(contained, "persistence fails at power " + std::to_string(s) + " on " + describe(g));
    int chi = chromatic_number(g);
    if (chi < 2) continue;  // no edges, no associated primes at any power
    auto stab = stabilization_union(g, 4, budget);
    c.expect(stab.stable_from <= chi - 1,
             "associated primes still growing past chi-1 on " + describe(g));
  }
  return c.ok;
}

// 7. squarefree dual generators vs color-bound generators; expansion criterion
bool criterion_secant(Check& c) {
  for (const auto& g : all_graphs_up_to(5))
    for (int s = 1; s <= 3; ++s) {
      std::vector<Monomial> squarefree;
      for (const auto& gen : dual_of_power(g, s).dual_generators)
        if (gen.is_squarefree()) squarefree.push_back(gen);
      std::sort(squarefree.begin(), squarefree.end());
      auto secant = secant_generators(g, s);
      std::sort(secant.begin(), secant.end());
      c.expect(squarefree == secant,
               "squarefree duals != secant generators at s=" + std::to_string(s) + " on " +
                   describe(g));
    }

  for (int n = 1; n <= 4; ++n)
    for (const auto& h : all_hypergraphs(n))
      for (int s = 1; s <= 3; ++s) {
        auto primes = dual_of_power(h, s).primes;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          std::vector<int> vars;
          for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) vars.push_back(v);
          PrimeSupport p(std::move(vars));
          bool associated = has_prime(primes, p);
          bool witnessed = expansion_witness(h, s, p).has_value();
          c.expect(associated == witnessed,
                   "expansion criterion disagrees at s=" + std::to_string(s) + ", prime " +
                       to_string(p) + " on " + describe(h));
        }
      }
  return c.ok;
}

// 8. the small supporting facts, checked in bulk
bool criterion_lemmas(Check& c) {
  std::mt19937 rng(20260821);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> n_dist(2, 7);
    int n = n_dist(rng);
    Hypergraph h = random_hypergraph(rng, n, n - 1, 3);
    std::bernoulli_distribution flip(0.5);
    std::vector<int> inside, outside;
    for (int v = 0; v < n; ++v) (flip(rng) ? inside : outside).push_back(v);
    c.expect(is_independent(h, inside) == is_vertex_cover(h, outside),
             "independent set / cover complement duality on " + describe(h));
  }

  Budget budget{5, 3};
  for (const auto& g : all_graphs_up_to(5)) {
    int n = g.vertex_count();
    for (int d = 1; d <= 3; ++d) {
      auto primes = dual_of_power(g, d, budget).primes;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vars;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1u) vars.push_back(v);
        PrimeSupport p(std::move(vars));
        c.expect(localize_check(g, p, d) == has_prime(primes, p),
                 "localization disagrees for " + to_string(p) + ", d=" + std::to_string(d) +
                     " on " + describe(g));
      }
    }
  }

  // every monomial whose colon is the maximal ideal divides (x1..xn)^{d-1}
  auto annihilator_scan = [&c](const Hypergraph& g, int d, const std::string& name) {
    MonomialIdeal jd = power(cover_ideal(g), d);
    int n = g.vertex_count();
    std::vector<int> bound = max_exponents(jd);
    int found = 0;
    Monomial m = Monomial::one(n);
    while (true) {
      if (!jd.contains(m)) {
        bool all_shifts_in = true;
        for (int i = 0; i < n && all_shifts_in; ++i) {
          Monomial shifted = m;
          ++shifted.exponents[i];
          all_shifts_in = jd.contains(shifted);
        }
        if (all_shifts_in) {
          ++found;
          bool divides = true;
          for (int i = 0; i < n; ++i) divides = divides && m.exponents[i] <= d - 1;
          c.expect(divides, name + ": witness " + to_string(m) + " exceeds (x1..xn)^{d-1}");
        }
      }
      int i = 0;
      while (i < n && m.exponents[i] == bound[i]) m.exponents[i++] = 0;
      if (i == n) break;
      ++m.exponents[i];
    }
    c.expect(found > 0, name + ": no maximal-ideal witness found at all");
  };
  annihilator_scan(cycle_graph(5), 2, "five-cycle squared");
  annihilator_scan(g6(), 3, "six-vertex example cubed");

  for (const auto& g : all_graphs_up_to(4)) {
    if (!is_perfect_bruteforce(g).perfect) continue;
    for (int s = 1; s <= 2; ++s)
      c.expect(is_perfect_bruteforce(expansion(g, s).expanded).perfect,
               "expansion at s=" + std::to_string(s) + " not perfect for " + describe(g));
  }
  return c.ok;
}

struct Criterion {
  int id;
  const char* summary;
  double limit_seconds;
  std::function<bool(Check&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table{
      {1, "chromatic number: membership route = search route", 60, criterion_chi},
      {2, "two-fold chromatic numbers through ideal membership", 60, criterion_b_fold},
      {3, "six-vertex example reproduced end to end", 120, criterion_six_vertex},
      {4, "duality involution, decomposition, associated-prime routes", 60, criterion_duality},
      {5, "perfection equivalence and clique classification", 120, criterion_perfection},
      {6, "persistence, odd holes, odd antiholes", 120, criterion_persistence},
      {7, "secant generators and the expansion criterion", 120, criterion_secant},
      {8, "cover duality, localization, annihilators, perfect expansions", 60, criterion_lemmas},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--list") == 0) {
      for (const auto& criterion : criteria())
        std::cout << criterion.id << ": " << criterion.summary << " (limit "
                  << criterion.limit_seconds << " s)\n";
      return 0;
    }
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
      continue;
    }
    std::cerr << "usage: acceptance [--list] [--criterion N]\n";
    return 2;
  }

  bool all_ok = true;
  for (const auto& criterion : criteria()) {
    if (selected != 0 && criterion.id != selected) continue;
    Check check;
    auto start = std::chrono::steady_clock::now();
    bool ok = criterion.run(check);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.limit_seconds) {
      ok = false;
      check.log << "    exceeded the " << criterion.limit_seconds << " s limit\n";
    }
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
              << criterion.summary << " (" << elapsed << " s)\n";
    std::cout << check.log.str();
  }
  return all_ok ? 0 : 1;
}
