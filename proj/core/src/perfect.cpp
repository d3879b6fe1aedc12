#include "coverideal/perfect.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "coverideal/coloring.hpp"
#include "coverideal/covers.hpp"

namespace coverideal {

namespace {

void require_graph(const Hypergraph& g) {
  if (!is_graph(g)) throw std::invalid_argument("operation requires a graph");
}

std::vector<std::uint64_t> adjacency_masks(const Hypergraph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const std::vector<int>& e : g.edges()) {
    adj[e[0]] |= std::uint64_t{1} << e[1];
    adj[e[1]] |= std::uint64_t{1} << e[0];
  }
  return adj;
}

int max_clique(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int size, int best) {
  if (cand == 0) return std::max(size, best);
  if (size + std::popcount(cand) <= best) return best;
  while (cand) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (size + 1 + std::popcount(cand & adj[v]) > best)
      best = max_clique(adj, cand & adj[v], size + 1, best);
  }
  return best;
}

// nonempty subsets of 0..n-1 ordered by size then lexicographically
template <typename F>
void for_each_subset_by_size(int n, F&& visit) {
  std::vector<int> pick;
  for (int size = 1; size <= n; ++size) {
    pick.assign(size, 0);
    auto recurse = [&](auto&& self, int from, int depth) -> bool {
      if (depth == size) return visit(pick);
      for (int v = from; v <= n - (size - depth); ++v) {
        pick[depth] = v;
        if (self(self, v + 1, depth + 1)) return true;
      }
      return false;
    };
    if (recurse(recurse, 0, 0)) return;
  }
}

}  // namespace

int clique_number(const Hypergraph& g) {
  require_graph(g);
  if (g.vertex_count() > 62) throw std::invalid_argument("clique search limited to 62 vertices");
  const std::vector<std::uint64_t> adj = adjacency_masks(g);
  const std::uint64_t all = g.vertex_count() == 62 ? ~std::uint64_t{0} >> 2
                                                   : (std::uint64_t{1} << g.vertex_count()) - 1;
  return max_clique(adj, all, 0, 0);
}

PerfectionCertificate is_perfect_bruteforce(const Hypergraph& g) {
  require_graph(g);
  PerfectionCertificate cert;
  for_each_subset_by_size(g.vertex_count(), [&](const std::vector<int>& subset) {
    const Hypergraph sub = induced(g, subset);
    const int chi = chromatic_number(sub);
    const int omega = clique_number(sub);
    if (chi != omega) {
      cert.perfect = false;
      cert.violating_set = subset;
      cert.chi = chi;
      cert.omega = omega;
      return true;
    }
    return false;
  });
  if (cert.perfect) {
    cert.chi = chromatic_number(g);
    cert.omega = clique_number(g);
  }
  return cert;
}

namespace {

std::vector<PrimeSupport> cliques_of_size(const Hypergraph& g, int lo, int hi) {
  std::vector<PrimeSupport> out;
  std::vector<int> pick;
  const std::vector<std::uint64_t> adj = adjacency_masks(g);
  auto recurse = [&](auto&& self, int from) -> void {
    const int size = static_cast<int>(pick.size());
    if (size >= lo) out.push_back(PrimeSupport(pick));
    if (size == hi) return;
    for (int v = from; v < g.vertex_count(); ++v) {
      bool joined = std::all_of(pick.begin(), pick.end(),
                                [&](int u) { return adj[u] >> v & 1; });
      if (!joined) continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PerfectionCertificate is_perfect_algebraic(const Hypergraph& g, Budget budget) {
  require_graph(g);
  PerfectionCertificate cert;
  const int chi = chi_algebraic(g);
  cert.chi = chi;
  for (int s = 1; s < chi; ++s) {
    const std::vector<PrimeSupport> actual = dual_of_power(g, s, budget).primes;
    const std::vector<PrimeSupport> expected = cliques_of_size(g, 2, s + 1);
    if (actual == expected) continue;
    cert.perfect = false;
    cert.power_checked = s;
    for (const PrimeSupport& p : actual) {
      if (!std::binary_search(expected.begin(), expected.end(), p)) {
        cert.prime = p;
        cert.mismatch = PerfectionCertificate::Mismatch::PrimeNotClique;
        return cert;
      }
    }
    for (const PrimeSupport& p : expected) {
      if (!std::binary_search(actual.begin(), actual.end(), p)) {
        cert.prime = p;
        cert.mismatch = PerfectionCertificate::Mismatch::CliqueNotAssociated;
        return cert;
      }
    }
  }
  return cert;
}

ChainCheck saturated_chain_check(const MonomialIdeal& ideal) {
  const std::vector<PrimeSupport> ass = associated_primes(ideal);
  ChainCheck check;
  for (const PrimeSupport& p : ass) {
    bool minimal = std::none_of(ass.begin(), ass.end(), [&](const PrimeSupport& q) {
      return q != p && p.contains(q);
    });
    if (minimal) continue;
    bool has_predecessor = std::any_of(ass.begin(), ass.end(), [&](const PrimeSupport& q) {
      return q.height() == p.height() - 1 && p.contains(q);
    });
    if (!has_predecessor) {
      check.holds = false;
      check.counterexample = p;
      return check;
    }
  }
  return check;
}

bool is_minimal_imperfect(const Hypergraph& g) {
  require_graph(g);
  if (is_perfect_bruteforce(g).perfect) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> rest;
    for (int w = 0; w < g.vertex_count(); ++w)
      if (w != v) rest.push_back(w);
    if (!is_perfect_bruteforce(induced(g, rest)).perfect) return false;
  }
  return true;
}

std::vector<PrimeSupport> simplicial_ass_classification(const Hypergraph& g, int x, int s) {
  require_graph(g);
  if (s < 1) throw std::invalid_argument("power must be positive");
  if (!is_simplicial(g, x)) throw std::invalid_argument("vertex is not simplicial");
  const std::vector<int> nbhd = neighbors(g, x);
  const int deg = static_cast<int>(nbhd.size());

  std::vector<PrimeSupport> out;
  std::vector<int> pick;
  auto recurse = [&](auto&& self, int from) -> void {
    const int size = static_cast<int>(pick.size());
    if (size >= 1 && size <= std::min(deg, s)) {
      std::vector<int> prime = pick;
      prime.push_back(x);
      std::sort(prime.begin(), prime.end());
      out.push_back(PrimeSupport(std::move(prime)));
    }
    if (size == std::min(deg, s)) return;
    for (std::size_t k = from; k < nbhd.size(); ++k) {
      pick.push_back(nbhd[k]);
      self(self, static_cast<int>(k) + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coverideal
