#include "commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "coverideal/coloring.hpp"
#include "coverideal/invariants.hpp"
#include "coverideal/perfect.hpp"
#include "io.hpp"

namespace coverideal::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDisagreement = 4;

void emit(const json& j, std::ostream& out) { out << j.dump() << "\n"; }

json one_based(const std::vector<int>& vertices) {
  json arr = json::array();
  for (int v : vertices) arr.push_back(v + 1);
  return arr;
}

json primes_json(const std::vector<PrimeSupport>& primes) {
  json arr = json::array();
  for (const auto& p : primes) arr.push_back(one_based(p.variables));
  return arr;
}

json exponents_json(const std::vector<Monomial>& monomials) {
  json arr = json::array();
  for (const auto& m : monomials) arr.push_back(m.exponents);
  return arr;
}

json components_json(const std::vector<IrreducibleComponent>& components) {
  json arr = json::array();
  for (const auto& c : components) arr.push_back(c.exponents);
  return arr;
}

void print_generators(const MonomialIdeal& ideal, std::ostream& out) {
  if (ideal.is_zero()) {
    out << "(0)\n";
    return;
  }
  for (const auto& g : ideal.generators()) out << to_string(g) << "\n";
}

int emit_ideal(const MonomialIdeal& ideal, int n, bool json_mode, std::ostream& out,
               const char* extra_key = nullptr, int extra_value = 0) {
  if (json_mode) {
    json j{{"n", n}, {"generators", exponents_json(ideal.generators())}};
    if (extra_key) j[extra_key] = extra_value;
    emit(j, out);
  } else {
    print_generators(ideal, out);
  }
  return kOk;
}

const char* mismatch_name(PerfectionCertificate::Mismatch m) {
  switch (m) {
    case PerfectionCertificate::Mismatch::PrimeNotClique:
      return "prime-not-clique";
    case PerfectionCertificate::Mismatch::CliqueNotAssociated:
      return "clique-not-associated";
    case PerfectionCertificate::Mismatch::None:
      break;
  }
  return "none";
}

json certificate_json(const PerfectionCertificate& cert) {
  json j{{"perfect", cert.perfect}};
  if (cert.violating_set) {
    j["violating_set"] = one_based(*cert.violating_set);
    j["chi"] = cert.chi;
    j["omega"] = cert.omega;
  } else if (cert.perfect && cert.chi > 0) {
    j["chi"] = cert.chi;
    j["omega"] = cert.omega;
  }
  if (cert.power_checked) j["power"] = *cert.power_checked;
  if (cert.prime) {
    j["prime"] = one_based(cert.prime->variables);
    j["mismatch"] = mismatch_name(cert.mismatch);
  }
  return j;
}

void print_certificate(const PerfectionCertificate& cert, std::ostream& out) {
  out << (cert.perfect ? "perfect" : "imperfect") << "\n";
  if (cert.violating_set) {
    out << "induced set {";
    for (std::size_t i = 0; i < cert.violating_set->size(); ++i)
      out << (i ? ", " : "") << vertex_label((*cert.violating_set)[i]);
    out << "} has chi = " << cert.chi << ", omega = " << cert.omega << "\n";
  }
  if (cert.prime) {
    out << "at power " << *cert.power_checked << ": " << to_string(*cert.prime);
    if (cert.mismatch == PerfectionCertificate::Mismatch::PrimeNotClique)
      out << " is associated but is not a clique of admissible size\n";
    else
      out << " is a clique of admissible size but is not associated\n";
  }
}

}  // namespace

int run_chi(const Hypergraph& h, bool json_mode, std::ostream& out) {
  int chi = chi_algebraic(h);
  if (json_mode)
    emit(json{{"chi", chi}, {"n", h.vertex_count()}}, out);
  else
    out << "chi = " << chi << "\n";
  return kOk;
}

int run_chi_b(const Hypergraph& h, int b, bool json_mode, std::ostream& out) {
  int chi = chi_b_algebraic(h, b);
  if (json_mode)
    emit(json{{"b", b}, {"chi", chi}, {"n", h.vertex_count()}}, out);
  else
    out << "chi_" << b << " = " << chi << "\n";
  return kOk;
}

int run_covers(const Hypergraph& h, bool json_mode, std::ostream& out) {
  auto covers = minimal_vertex_covers(h);
  if (json_mode) {
    json arr = json::array();
    for (const auto& c : covers) arr.push_back(one_based(c));
    emit(json{{"covers", arr}, {"n", h.vertex_count()}}, out);
    return kOk;
  }
  for (const auto& c : covers) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << vertex_label(c[i]);
    out << "\n";
  }
  return kOk;
}

int run_cover_ideal(const Hypergraph& h, bool json_mode, std::ostream& out) {
  return emit_ideal(cover_ideal(h), h.vertex_count(), json_mode, out);
}

int run_edge_ideal(const Hypergraph& h, bool json_mode, std::ostream& out) {
  return emit_ideal(edge_ideal(h), h.vertex_count(), json_mode, out);
}

int run_dual(const Hypergraph& h, int s, const Budget& budget, bool json_mode, std::ostream& out) {
  auto report = dual_of_power(h, s, budget);
  if (json_mode) {
    emit(json{{"generators", exponents_json(report.dual_generators)},
              {"n", h.vertex_count()},
              {"s", s}},
         out);
  } else {
    for (const auto& g : report.dual_generators) out << to_string(g) << "\n";
  }
  return kOk;
}

int run_decompose(const Hypergraph& h, int s, const Budget& budget, bool json_mode,
                  std::ostream& out) {
  auto report = dual_of_power(h, s, budget);
  if (json_mode) {
    emit(json{{"components", components_json(report.components)},
              {"n", h.vertex_count()},
              {"s", s}},
         out);
  } else {
    for (const auto& c : report.components) out << to_string(c) << "\n";
  }
  return kOk;
}

int run_ass_primes(const Hypergraph& h, int s, const Budget& budget, bool json_mode,
                   std::ostream& out) {
  auto report = dual_of_power(h, s, budget);
  if (json_mode) {
    emit(json{{"n", h.vertex_count()}, {"primes", primes_json(report.primes)}, {"s", s}}, out);
  } else {
    for (const auto& p : report.primes) out << to_string(p) << "\n";
  }
  return kOk;
}

int run_secant(const Hypergraph& h, int s, int degree_cap, bool json_mode, std::ostream& out) {
  auto gens = secant_generators(h, s, degree_cap);
  if (json_mode) {
    json j{{"generators", exponents_json(gens)}, {"n", h.vertex_count()}, {"s", s}};
    if (degree_cap >= 0) j["degree_cap"] = degree_cap;
    emit(j, out);
  } else {
    for (const auto& g : gens) out << to_string(g) << "\n";
  }
  return kOk;
}

int run_perfect(const Hypergraph& h, PerfectMethod method, const Budget& budget, bool json_mode,
                std::ostream& out) {
  if (method == PerfectMethod::Brute) {
    auto cert = is_perfect_bruteforce(h);
    if (json_mode) {
      json j = certificate_json(cert);
      j["method"] = "brute";
      j["n"] = h.vertex_count();
      emit(j, out);
    } else {
      print_certificate(cert, out);
    }
    return kOk;
  }
  if (method == PerfectMethod::Algebraic) {
    auto cert = is_perfect_algebraic(h, budget);
    if (json_mode) {
      json j = certificate_json(cert);
      j["method"] = "algebraic";
      j["n"] = h.vertex_count();
      emit(j, out);
    } else {
      print_certificate(cert, out);
    }
    return kOk;
  }
  auto brute = is_perfect_bruteforce(h);
  auto algebraic = is_perfect_algebraic(h, budget);
  bool agree = brute.perfect == algebraic.perfect;
  if (json_mode) {
    emit(json{{"agree", agree},
              {"algebraic", certificate_json(algebraic)},
              {"brute", certificate_json(brute)},
              {"method", "both"},
              {"n", h.vertex_count()},
              {"perfect", brute.perfect}},
         out);
  } else {
    if (agree) {
      print_certificate(brute, out);
    } else {
      out << "methods disagree\n";
      out << "brute: " << (brute.perfect ? "perfect" : "imperfect") << "\n";
      out << "algebraic: " << (algebraic.perfect ? "perfect" : "imperfect") << "\n";
    }
  }
  return agree ? kOk : kDisagreement;
}

int run_expand(const Hypergraph& h, int s, bool json_mode, std::ostream& out) {
  auto exp = expansion(h, s);
  if (json_mode) {
    json edges = json::array();
    for (const auto& e : exp.expanded.edges()) edges.push_back(one_based(e));
    json labels = json::array();
    for (const auto& v : exp.vertices) labels.push_back(vertex_label(v));
    emit(json{{"edges", edges},
              {"n", exp.expanded.vertex_count()},
              {"n_base", h.vertex_count()},
              {"s", s},
              {"vertices", labels}},
         out);
    return kOk;
  }
  for (const auto& v : exp.vertices)
    out << "# " << vertex_label(exp.index_of(v.base, v.shadow)) << " = " << vertex_label(v)
        << "\n";
  out << write_hypergraph(exp.expanded);
  return kOk;
}

int run_witness(const Hypergraph& h, int s, const std::vector<int>& prime_one_based,
                bool json_mode, std::ostream& out) {
  std::vector<int> vars;
  vars.reserve(prime_one_based.size());
  for (int v : prime_one_based) {
    if (v < 1 || v > h.vertex_count())
      throw std::invalid_argument("prime member " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(h.vertex_count()));
    vars.push_back(v - 1);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  PrimeSupport prime(std::move(vars));
  auto witness = expansion_witness(h, s, prime);
  if (json_mode) {
    json j{{"found", witness.has_value()},
           {"n", h.vertex_count()},
           {"prime", one_based(prime.variables)},
           {"s", s}};
    if (witness) {
      json labels = json::array();
      for (const auto& v : *witness) labels.push_back(vertex_label(v));
      j["witness"] = labels;
    } else {
      j["witness"] = nullptr;
    }
    emit(j, out);
    return kOk;
  }
  if (!witness) {
    out << "no witness\n";
    return kOk;
  }
  out << "T = {";
  for (std::size_t i = 0; i < witness->size(); ++i)
    out << (i ? ", " : "") << vertex_label((*witness)[i]);
  out << "}\n";
  return kOk;
}

int run_persistence(const Hypergraph& h, int s_max, const Budget& budget, bool json_mode,
                    std::ostream& out) {
  auto steps = persistence_scan(h, s_max, budget);
  auto stab = stabilization_union(h, s_max, budget);
  if (json_mode) {
    json arr = json::array();
    for (const auto& [s, contained] : steps)
      arr.push_back(json{{"contained", contained}, {"s", s}});
    emit(json{{"n", h.vertex_count()},
              {"s_max", s_max},
              {"stable_from", stab.stable_from},
              {"steps", arr},
              {"union", primes_json(stab.union_primes)}},
         out);
    return kOk;
  }
  for (const auto& [s, contained] : steps)
    out << "Ass(J^" << s << ") in Ass(J^" << s + 1 << "): " << (contained ? "yes" : "no") << "\n";
  out << "union over s = 1.." << s_max << " reached at s = " << stab.stable_from << "\n";
  for (const auto& p : stab.union_primes) out << to_string(p) << "\n";
  return kOk;
}

}  // namespace coverideal::cli
