#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coverideal/budget.hpp"
#include "coverideal/covers.hpp"
#include "coverideal/hypergraph.hpp"
#include "coverideal/monomial.hpp"

namespace coverideal {

/// Alexander dual of the s-th cover-ideal power taken at (s,..,s), together
/// with everything read off from it. components[k] corresponds to
/// dual_generators[k] under b_i = s + 1 - c_i on the support; primes are the
/// deduplicated component supports.
struct AssReport {
  int s = 1;
  std::vector<Monomial> dual_generators;
  std::vector<IrreducibleComponent> components;
  std::vector<PrimeSupport> primes;
};

/// Chromatic number through ideal membership: least d with
/// (x_1..x_n)^{d-1} in J^d for the cover ideal J.
int chi_algebraic(const Hypergraph& h);

/// b-fold chromatic number through ideal membership: least d >= b with
/// (x_1..x_n)^{d-b} in J^d. Graphs only.
int chi_b_algebraic(const Hypergraph& g, int b);

AssReport dual_of_power(const Hypergraph& h, int s, Budget budget = {});

/// Minimal squarefree monomials m_W with chi(induced(h, W)) > s, restricted to
/// |W| <= degree_cap (default: no restriction).
std::vector<Monomial> secant_generators(const Hypergraph& h, int s, int degree_cap = -1);

/// Searches the s-th expansion for a vertex set T containing the first shadow
/// of every member of `prime`, contained in the shadows of `prime`, whose
/// induced subhypergraph is critically (s+1)-chromatic. Shadow counts are
/// scanned by total size, then lexicographically, and shadows are taken
/// consecutively from the first, so the returned set is canonical. Empty
/// result means no such T exists.
std::optional<std::vector<ExpansionVertex>> expansion_witness(const Hypergraph& h, int s,
                                                              const PrimeSupport& prime);

/// Does the full support of induced(h, prime) appear among the associated
/// primes of the induced hypergraph's s-th cover-ideal power? Equivalent to
/// membership of `prime` in dual_of_power(h, d).primes.
bool localize_check(const Hypergraph& h, const PrimeSupport& prime, int d);

/// For each s < s_max: is every associated prime of J^s associated to J^{s+1}?
std::vector<std::pair<int, bool>> persistence_scan(const Hypergraph& h, int s_max,
                                                   Budget budget = {});

/// Union of associated primes over powers 1..s_max and the first power at
/// which the running union already equals that union. Only describes the
/// scanned window; says nothing about larger powers.
struct StabilizationReport {
  int s_max = 1;
  std::vector<PrimeSupport> union_primes;
  int stable_from = 1;
};

StabilizationReport stabilization_union(const Hypergraph& h, int s_max, Budget budget = {});

}  // namespace coverideal
