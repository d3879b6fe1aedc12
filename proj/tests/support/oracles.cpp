#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coverideal::testing {

namespace {

bool subset_covers(const Hypergraph& h, unsigned mask) {
  for (const auto& edge : h.edges()) {
    bool hit = false;
    for (int v : edge) hit = hit || ((mask >> v) & 1u);
    if (!hit) return false;
  }
  return true;
}

std::vector<Monomial> reduce(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& other : gens)
      if (other != g && other.divides(g)) {
        // Ties between equal monomials were removed above, so strict division.
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

}  // namespace

std::vector<std::vector<int>> oracle_minimal_covers(const Hypergraph& h) {
  int n = h.vertex_count();
  if (n > 20) throw std::invalid_argument("oracle_minimal_covers: too many vertices");
  std::vector<unsigned> covers;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (subset_covers(h, mask)) covers.push_back(mask);
  std::vector<std::vector<int>> minimal;
  for (unsigned c : covers) {
    bool is_minimal = true;
    for (unsigned d : covers)
      if (d != c && (d & ~c) == 0) {
        is_minimal = false;
        break;
      }
    if (!is_minimal) continue;
    std::vector<int> vertices;
    for (int v = 0; v < n; ++v)
      if ((c >> v) & 1u) vertices.push_back(v);
    minimal.push_back(std::move(vertices));
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

int oracle_chromatic(const Hypergraph& h) {
  int n = h.vertex_count();
  if (n > 8) throw std::invalid_argument("oracle_chromatic: too many vertices");
  for (int d = 1;; ++d) {
    std::vector<int> color(n, 0);
    while (true) {
      bool proper = true;
      for (const auto& edge : h.edges()) {
        bool mono = true;
        for (int v : edge) mono = mono && color[v] == color[edge[0]];
        if (mono) {
          proper = false;
          break;
        }
      }
      if (proper) return d;
      int i = 0;
      while (i < n && color[i] == d - 1) color[i++] = 0;
      if (i == n) break;
      ++color[i];
    }
  }
}

std::vector<Monomial> oracle_multiply(const std::vector<Monomial>& a,
                                      const std::vector<Monomial>& b) {
  std::vector<Monomial> products;
  for (const auto& x : a)
    for (const auto& y : b) products.push_back(x * y);
  return reduce(std::move(products));
}

std::vector<Monomial> oracle_power(const std::vector<Monomial>& gens, int n, int s) {
  std::vector<Monomial> acc{Monomial::one(n)};
  for (int i = 0; i < s; ++i) acc = oracle_multiply(acc, gens);
  return acc;
}

bool oracle_membership(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

std::vector<Monomial> oracle_dual(const std::vector<Monomial>& gens, int n,
                                  const std::vector<int>& a) {
  // m^{a \ b} for one generator x^b, as a generator list.
  auto piece = [&](const Monomial& b) {
    std::vector<Monomial> vars;
    for (int i = 0; i < n; ++i) {
      if (b.exponents[i] < 1) continue;
      Monomial v = Monomial::one(n);
      v.exponents[i] = a[i] + 1 - b.exponents[i];
      vars.push_back(std::move(v));
    }
    return vars;
  };
  if (gens.empty()) return {Monomial::one(n)};
  std::vector<Monomial> acc = piece(gens[0]);
  for (std::size_t k = 1; k < gens.size(); ++k) {
    auto next = piece(gens[k]);
    std::vector<Monomial> meet;
    for (const auto& x : acc)
      for (const auto& y : next) meet.push_back(lcm(x, y));
    acc = reduce(std::move(meet));
  }
  return acc;
}

bool oracle_is_associated(const std::vector<Monomial>& gens, int n, const std::vector<int>& vars) {
  if (gens.empty()) return false;
  std::vector<int> bound(n, 0);
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) bound[i] = std::max(bound[i], g.exponents[i]);
  std::vector<char> in_prime(n, 0);
  for (int v : vars) in_prime[v] = 1;
  // Monomial with maximal exponents outside the prime; nothing supported off
  // the prime may land in the colon, and this single test certifies that.
  Monomial off = Monomial::one(n);
  for (int i = 0; i < n; ++i)
    if (!in_prime[i]) off.exponents[i] = bound[i];
  Monomial m = Monomial::one(n);
  while (true) {
    // (I : m) equals prime(vars) iff m is outside I, every x_v m with v in
    // vars is inside, and the colon stays inside the prime. The last part
    // follows from off*m being outside I: anything in the colon supported
    // away from the prime would divide off after truncating to the exponent
    // bound, and ideals are closed under multiples.
    if (!oracle_membership(gens, m) && !oracle_membership(gens, off * m)) {
      bool all_in = true;
      for (int v : vars) {
        Monomial shifted = m;
        ++shifted.exponents[v];
        all_in = all_in && oracle_membership(gens, shifted);
      }
      if (all_in) return true;
    }
    int i = 0;
    while (i < n && m.exponents[i] == bound[i]) m.exponents[i++] = 0;
    if (i == n) return false;
    ++m.exponents[i];
  }
}

std::vector<std::vector<int>> oracle_associated_primes(const std::vector<Monomial>& gens, int n) {
  std::vector<std::vector<int>> primes;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1u) vars.push_back(v);
    if (oracle_is_associated(gens, n, vars)) primes.push_back(std::move(vars));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

Hypergraph random_hypergraph(std::mt19937& rng, int n, int edge_count, int max_edge_size) {
  std::uniform_int_distribution<int> size_dist(2, std::min(max_edge_size, n));
  std::uniform_int_distribution<int> vertex_dist(0, n - 1);
  std::vector<std::vector<int>> edges;
  for (int k = 0; k < edge_count; ++k) {
    std::set<int> edge;
    int size = size_dist(rng);
    while (static_cast<int>(edge.size()) < size) edge.insert(vertex_dist(rng));
    edges.emplace_back(edge.begin(), edge.end());
  }
  return Hypergraph(n, edges, EdgePolicy::Minimalize);
}

Hypergraph random_graph(std::mt19937& rng, int n, double edge_probability) {
  std::bernoulli_distribution flip(edge_probability);
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) edges.push_back({i, j});
  return Hypergraph(n, edges);
}

std::vector<Monomial> random_ideal(std::mt19937& rng, int n, int max_exponent, int generators) {
  std::uniform_int_distribution<int> exp_dist(0, max_exponent);
  std::vector<Monomial> gens;
  for (int k = 0; k < generators; ++k) {
    Monomial m = Monomial::one(n);
    int degree = 0;
    for (int i = 0; i < n; ++i) degree += (m.exponents[i] = exp_dist(rng));
    if (degree == 0) m.exponents[exp_dist(rng) % n] = 1;
    gens.push_back(std::move(m));
  }
  return gens;
}

}  // namespace coverideal::testing
