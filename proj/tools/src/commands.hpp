#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "coverideal/budget.hpp"
#include "coverideal/hypergraph.hpp"

namespace coverideal::cli {

enum class PerfectMethod { Brute, Algebraic, Both };

// Each run_* writes the command result (text or JSON) to `out` and returns
// the process exit code. Budget violations escape as BudgetExceeded and bad
// input as std::invalid_argument; main maps those to exit codes.

int run_chi(const Hypergraph& h, bool json, std::ostream& out);
int run_chi_b(const Hypergraph& h, int b, bool json, std::ostream& out);
int run_covers(const Hypergraph& h, bool json, std::ostream& out);
int run_cover_ideal(const Hypergraph& h, bool json, std::ostream& out);
int run_edge_ideal(const Hypergraph& h, bool json, std::ostream& out);
int run_dual(const Hypergraph& h, int s, const Budget& budget, bool json, std::ostream& out);
int run_decompose(const Hypergraph& h, int s, const Budget& budget, bool json, std::ostream& out);
int run_ass_primes(const Hypergraph& h, int s, const Budget& budget, bool json, std::ostream& out);
int run_secant(const Hypergraph& h, int s, int degree_cap, bool json, std::ostream& out);
int run_perfect(const Hypergraph& h, PerfectMethod method, const Budget& budget, bool json,
                std::ostream& out);
int run_expand(const Hypergraph& h, int s, bool json, std::ostream& out);
int run_witness(const Hypergraph& h, int s, const std::vector<int>& prime_one_based, bool json,
                std::ostream& out);
int run_persistence(const Hypergraph& h, int s_max, const Budget& budget, bool json,
                    std::ostream& out);

}  // namespace coverideal::cli
