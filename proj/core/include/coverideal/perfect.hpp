#pragma once

#include <optional>
#include <vector>

#include "coverideal/budget.hpp"
#include "coverideal/hypergraph.hpp"
#include "coverideal/invariants.hpp"
#include "coverideal/monomial.hpp"

namespace coverideal {

int clique_number(const Hypergraph& g);

/// Outcome of a perfection test plus a re-checkable witness. For the
/// brute-force route a failure carries the first induced set (by size, then
/// lexicographically) with chi != omega. For the algebraic route it carries
/// the power s and the offending prime: either an associated prime that is
/// not a clique of size 2..s+1, or such a clique that is not associated.
struct PerfectionCertificate {
  enum class Mismatch { None, PrimeNotClique, CliqueNotAssociated };

  bool perfect = true;
  std::optional<std::vector<int>> violating_set;
  int chi = 0;
  int omega = 0;
  std::optional<int> power_checked;
  std::optional<PrimeSupport> prime;
  Mismatch mismatch = Mismatch::None;
};

/// Definition check: chi = omega on every nonempty induced subgraph.
PerfectionCertificate is_perfect_bruteforce(const Hypergraph& g);

/// Ideal-theoretic check: for every power s in [1, chi-1], the associated
/// primes of J^s are exactly the cliques of size 2..s+1. Decides perfection
/// without any forbidden-subgraph reasoning. The default budget admits any
/// graph within max_n; lower it only deliberately.
PerfectionCertificate is_perfect_algebraic(const Hypergraph& g, Budget budget = {10, 10});

/// Every non-minimal associated prime must contain an associated prime of
/// height exactly one less. On failure carries the prime with no such
/// predecessor.
struct ChainCheck {
  bool holds = true;
  std::optional<PrimeSupport> counterexample;
};

ChainCheck saturated_chain_check(const MonomialIdeal& ideal);

/// Imperfect, but every proper induced subgraph is perfect.
bool is_minimal_imperfect(const Hypergraph& g);

/// Associated primes of J^s containing a simplicial vertex x, predicted
/// combinatorially: {x} together with 1..min(deg(x), s) of its neighbors.
std::vector<PrimeSupport> simplicial_ass_classification(const Hypergraph& g, int x, int s);

}  // namespace coverideal
