#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "coverideal/budget.hpp"
#include "coverideal/hypergraph.hpp"
#include "io.hpp"

namespace {

using coverideal::Budget;
using coverideal::BudgetExceeded;
using coverideal::Hypergraph;
using namespace coverideal::cli;

constexpr int kInputError = 2;
constexpr int kBudgetError = 3;

struct FileArgs {
  std::string path;
  bool json = false;
};

// Adds the arguments every subcommand shares.
void add_common(CLI::App* cmd, FileArgs& args) {
  cmd->add_option("file", args.path, "hypergraph file (n/e line format)")->required();
  cmd->add_flag("--json", args.json, "machine-readable output");
}

void add_budget(CLI::App* cmd, Budget& budget) {
  cmd->add_option("--max-n", budget.max_n, "largest vertex count the dual computation accepts");
  cmd->add_option("--max-s", budget.max_s, "largest power the dual computation accepts");
}

Hypergraph load(const std::string& path) {
  Hypergraph h = read_hypergraph_file(path);
  auto isolated = coverideal::isolated_vertices(h);
  if (!isolated.empty()) {
    std::cerr << "warning: isolated vertices present:";
    for (int v : isolated) std::cerr << " " << coverideal::vertex_label(v);
    std::cerr << "\n";
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cover ideals of hypergraphs: powers, duals, associated primes"};
  app.require_subcommand(1);

  FileArgs args;
  int s = 1;
  int b = 2;
  int s_max = 3;
  int degree_cap = -1;
  Budget budget;
  Budget perfect_budget{10, 10};
  std::string method = "both";
  std::vector<int> prime;

  auto* chi = app.add_subcommand("chi", "chromatic number");
  add_common(chi, args);

  auto* chi_b = app.add_subcommand("chi-b", "b-fold chromatic number (graphs only)");
  add_common(chi_b, args);
  chi_b->add_option("--b", b, "colors per vertex")->check(CLI::PositiveNumber);

  auto* covers = app.add_subcommand("covers", "minimal vertex covers");
  add_common(covers, args);

  auto* cover_ideal = app.add_subcommand("cover-ideal", "generators of the cover ideal");
  add_common(cover_ideal, args);

  auto* edge_ideal = app.add_subcommand("edge-ideal", "generators of the edge ideal");
  add_common(edge_ideal, args);

  auto* dual = app.add_subcommand("dual", "dual generators of the s-th cover-ideal power");
  add_common(dual, args);
  dual->add_option("--s", s, "power")->check(CLI::PositiveNumber);
  add_budget(dual, budget);

  auto* decompose =
      app.add_subcommand("decompose", "irreducible decomposition of the s-th cover-ideal power");
  add_common(decompose, args);
  decompose->add_option("--s", s, "power")->check(CLI::PositiveNumber);
  add_budget(decompose, budget);

  auto* ass = app.add_subcommand("ass-primes", "associated primes of the s-th cover-ideal power");
  add_common(ass, args);
  ass->add_option("--s", s, "power")->check(CLI::PositiveNumber);
  add_budget(ass, budget);

  auto* secant = app.add_subcommand(
      "secant", "minimal squarefree monomials whose vertex set is not s-colorable");
  add_common(secant, args);
  secant->add_option("--s", s, "colorability threshold")->check(CLI::PositiveNumber);
  secant->add_option("--degree-cap", degree_cap, "only report generators up to this degree");

  auto* perfect = app.add_subcommand("perfect", "perfection test");
  add_common(perfect, args);
  perfect->add_option("--method", method, "brute | algebraic | both (default both)")
      ->check(CLI::IsMember({"brute", "algebraic", "both"}));
  add_budget(perfect, perfect_budget);

  auto* expand = app.add_subcommand("expand", "s-th expansion hypergraph");
  add_common(expand, args);
  expand->add_option("--s", s, "shadows per vertex")->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand(
      "witness", "critically (s+1)-chromatic expansion subhypergraph for a prime");
  add_common(witness, args);
  witness->add_option("--s", s, "power")->check(CLI::PositiveNumber);
  witness->add_option("--prime", prime, "prime support, comma-separated 1-based vertices")
      ->required()
      ->delimiter(',');

  auto* persistence =
      app.add_subcommand("persistence", "associated-prime containment along powers 1..s-max");
  add_common(persistence, args);
  persistence->add_option("--s-max", s_max, "last power to scan")->check(CLI::PositiveNumber);
  add_budget(persistence, budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    Hypergraph h = load(args.path);
    std::ostream& out = std::cout;
    if (*chi) return run_chi(h, args.json, out);
    if (*chi_b) return run_chi_b(h, b, args.json, out);
    if (*covers) return run_covers(h, args.json, out);
    if (*cover_ideal) return run_cover_ideal(h, args.json, out);
    if (*edge_ideal) return run_edge_ideal(h, args.json, out);
    if (*dual) return run_dual(h, s, budget, args.json, out);
    if (*decompose) return run_decompose(h, s, budget, args.json, out);
    if (*ass) return run_ass_primes(h, s, budget, args.json, out);
    if (*secant) return run_secant(h, s, degree_cap, args.json, out);
    if (*perfect) {
      PerfectMethod m = method == "brute"      ? PerfectMethod::Brute
                        : method == "algebraic" ? PerfectMethod::Algebraic
                                                 : PerfectMethod::Both;
      return run_perfect(h, m, perfect_budget, args.json, out);
    }
    if (*expand) return run_expand(h, s, args.json, out);
    if (*witness) return run_witness(h, s, prime, args.json, out);
    if (*persistence) return run_persistence(h, s_max, budget, args.json, out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
