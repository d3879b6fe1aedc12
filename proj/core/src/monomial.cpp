#include "coverideal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coverideal {

namespace {

void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials live in different rings");
}

// Cells above this are handled by pairwise intersection instead of the grid.
constexpr std::size_t kGridCellCap = std::size_t{1} << 24;
constexpr std::size_t kGridCornerCap = std::size_t{1} << 26;

}  // namespace

Monomial Monomial::of_support(int n, const std::vector<int>& vars) {
  std::vector<int> e(n, 0);
  for (int v : vars) {
    if (v < 0 || v >= n) throw std::invalid_argument("variable index out of range");
    e[v] = 1;
  }
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool Monomial::is_squarefree() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& m) const {
  check_same_ring(*this, m);
  for (int i = 0; i < size(); ++i)
    if (exponents[i] > m.exponents[i]) return false;
  return true;
}

Monomial Monomial::quotient_by_gcd(const Monomial& m) const {
  check_same_ring(*this, m);
  std::vector<int> e(exponents.size());
  for (int i = 0; i < size(); ++i) e[i] = std::max(exponents[i] - m.exponents[i], 0);
  return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  std::vector<int> e(exponents.size());
  for (int i = 0; i < size(); ++i) e[i] = exponents[i] * k;
  return Monomial(std::move(e));
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i)
    if (exponents[i] > 0) s.push_back(i);
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  std::vector<int> e(a.exponents.size());
  for (int i = 0; i < a.size(); ++i) e[i] = a.exponents[i] + b.exponents[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  std::vector<int> e(a.exponents.size());
  for (int i = 0; i < a.size(); ++i) e[i] = std::max(a.exponents[i], b.exponents[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  std::vector<int> e(a.exponents.size());
  for (int i = 0; i < a.size(); ++i) e[i] = std::min(a.exponents[i], b.exponents[i]);
  return Monomial(std::move(e));
}

bool PrimeSupport::contains(const PrimeSupport& other) const {
  return std::includes(variables.begin(), variables.end(),
                       other.variables.begin(), other.variables.end());
}

PrimeSupport IrreducibleComponent::support() const {
  std::vector<int> vars;
  for (int i = 0; i < static_cast<int>(exponents.size()); ++i)
    if (exponents[i] >= 1) vars.push_back(i);
  return PrimeSupport(std::move(vars));
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  for (const Monomial& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generator has wrong variable count");
    for (int e : g.exponents)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }
  // scan by increasing degree so every divisor of g is seen before g
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) {
              int da = a.degree(), db = b.degree();
              return da != db ? da < db : a < b;
            });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const Monomial& g : generators) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.size() != n_) throw std::invalid_argument("monomial has wrong variable count");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimalize(int n, std::vector<Monomial> generators) {
  return MonomialIdeal(n, std::move(generators));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ideals live in different rings");
  std::vector<Monomial> products;
  products.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) products.push_back(g * h);
  return MonomialIdeal(a.ambient(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, int s) {
  if (s < 0) throw std::invalid_argument("negative power");
  if (s == 0) return MonomialIdeal::unit(ideal.ambient());
  MonomialIdeal acc = ideal;
  for (int k = 1; k < s; ++k) acc = multiply(acc, ideal);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) quotients.push_back(g.quotient_by_gcd(m));
  return MonomialIdeal(ideal.ambient(), std::move(quotients));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ideals live in different rings");
  std::vector<Monomial> lcms;
  lcms.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) lcms.push_back(lcm(g, h));
  return MonomialIdeal(a.ambient(), std::move(lcms));
}

MonomialIdeal irreducible_ideal(int n, const IrreducibleComponent& component) {
  if (static_cast<int>(component.exponents.size()) != n)
    throw std::invalid_argument("component has wrong variable count");
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    if (component.exponents[i] >= 1) {
      std::vector<int> e(n, 0);
      e[i] = component.exponents[i];
      gens.push_back(Monomial(std::move(e)));
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

namespace {

// x^c lies in m^{a \ b}  iff  c_i >= a_i + 1 - b_i for some i with b_i >= 1.
// Equivalently x^c is OUTSIDE iff c fits in the box c_i <= u_i with
// u_i = a_i - b_i where b_i >= 1 and u_i = a_i elsewhere. The dual's members
// are the grid cells covered by no box; minimal generators are members whose
// every predecessor cell is covered.
MonomialIdeal dual_by_grid(const MonomialIdeal& ideal, const std::vector<int>& a) {
  const int n = ideal.ambient();
  std::vector<std::size_t> dims(n), stride(n);
  std::size_t cells = 1;
  for (int i = 0; i < n; ++i) {
    dims[i] = static_cast<std::size_t>(a[i]) + 1;
    cells *= dims[i];
  }
  for (int i = n - 1; i >= 0; --i)
    stride[i] = (i == n - 1) ? 1 : stride[i + 1] * dims[i + 1];

  std::vector<std::int32_t> cnt(cells, 0);
  std::vector<int> tight;
  for (const Monomial& g : ideal.generators()) {
    std::vector<std::size_t> u(n);
    tight.clear();
    for (int i = 0; i < n; ++i) {
      u[i] = g.exponents[i] >= 1 ? static_cast<std::size_t>(a[i] - g.exponents[i])
                                 : static_cast<std::size_t>(a[i]);
      if (u[i] + 1 < dims[i]) tight.push_back(i);
    }
    // inclusion-exclusion corners of the box [0, u]
    const int t = static_cast<int>(tight.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
      std::size_t off = 0;
      int bits = 0;
      for (int k = 0; k < t; ++k) {
        if (mask >> k & 1) {
          off += (u[tight[k]] + 1) * stride[tight[k]];
          ++bits;
        }
      }
      cnt[off] += (bits % 2 == 0) ? 1 : -1;
    }
  }

  // prefix sums along each dimension turn corner deltas into box coverage counts
  for (int i = 0; i < n; ++i) {
    const std::size_t block = stride[i] * dims[i];
    for (std::size_t base = 0; base < cells; base += block)
      for (std::size_t off = stride[i]; off < block; ++off)
        cnt[base + off] += cnt[base + off - stride[i]];
  }

  std::vector<Monomial> out;
  std::vector<int> c(n, 0);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    if (cnt[idx] == 0) {
      bool minimal = true;
      for (int i = 0; i < n && minimal; ++i)
        if (c[i] > 0 && cnt[idx - stride[i]] == 0) minimal = false;
      if (minimal) out.push_back(Monomial(c));
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++c[i] < static_cast<int>(dims[i])) break;
      c[i] = 0;
    }
  }
  return MonomialIdeal(n, std::move(out));
}

MonomialIdeal dual_by_intersection(const MonomialIdeal& ideal, const std::vector<int>& a) {
  const int n = ideal.ambient();
  std::vector<IrreducibleComponent> pieces;
  pieces.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < n; ++i)
      if (g.exponents[i] >= 1) e[i] = a[i] + 1 - g.exponents[i];
    pieces.push_back(IrreducibleComponent(std::move(e)));
  }
  // small supports first keeps the running intersection short
  std::sort(pieces.begin(), pieces.end(),
            [](const IrreducibleComponent& x, const IrreducibleComponent& y) {
              int hx = x.support().height(), hy = y.support().height();
              return hx != hy ? hx < hy : x < y;
            });
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const IrreducibleComponent& p : pieces) acc = intersect(acc, irreducible_ideal(n, p));
  return acc;
}

}  // namespace

MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const std::vector<int>& a) {
  const int n = ideal.ambient();
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("bound has wrong variable count");
  for (int ai : a)
    if (ai < 0) throw std::invalid_argument("bound has a negative entry");
  for (const Monomial& g : ideal.generators())
    for (int i = 0; i < n; ++i)
      if (g.exponents[i] > a[i])
        throw std::invalid_argument("generator " + to_string(g) + " does not divide the dualizing bound");
  if (ideal.is_zero()) return MonomialIdeal::unit(n);

  std::size_t cells = 1;
  bool grid_fits = true;
  for (int i = 0; i < n && grid_fits; ++i) {
    cells *= static_cast<std::size_t>(a[i]) + 1;
    if (cells > kGridCellCap) grid_fits = false;
  }
  if (grid_fits) {
    std::size_t corners = 0;
    for (const Monomial& g : ideal.generators()) {
      int t = 0;
      for (int i = 0; i < n; ++i)
        if (g.exponents[i] >= 1 && a[i] > 0) ++t;
      corners += std::size_t{1} << std::min(t, 62);
      if (corners > kGridCornerCap) {
        grid_fits = false;
        break;
      }
    }
  }
  return grid_fits ? dual_by_grid(ideal, a) : dual_by_intersection(ideal, a);
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("zero ideal has no irreducible decomposition");
  const int n = ideal.ambient();
  std::vector<int> a(n, 0);
  for (const Monomial& g : ideal.generators())
    for (int i = 0; i < n; ++i) a[i] = std::max(a[i], g.exponents[i]);
  MonomialIdeal dual = alexander_dual(ideal, a);
  std::vector<IrreducibleComponent> components;
  components.reserve(dual.generators().size());
  for (const Monomial& c : dual.generators()) {
    std::vector<int> b(n, 0);
    for (int i = 0; i < n; ++i)
      if (c.exponents[i] >= 1) b[i] = a[i] + 1 - c.exponents[i];
    components.push_back(IrreducibleComponent(std::move(b)));
  }
  std::sort(components.begin(), components.end());
  return components;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal) {
  std::vector<PrimeSupport> primes;
  for (const IrreducibleComponent& c : irreducible_decomposition(ideal))
    primes.push_back(c.support());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<PrimeSupport> associated_primes_witness(const MonomialIdeal& ideal,
                                                    const std::vector<int>& bound) {
  const int n = ideal.ambient();
  if (static_cast<int>(bound.size()) != n)
    throw std::invalid_argument("bound has wrong variable count");
  for (int b : bound)
    if (b < 0) throw std::invalid_argument("bound has a negative entry");

  std::vector<PrimeSupport> primes;
  std::vector<int> t(n, 0);
  while (true) {
    Monomial candidate{t};
    if (!ideal.contains(candidate)) {
      MonomialIdeal quotient = colon(ideal, candidate);
      bool variable_generated =
          !quotient.is_zero() &&
          std::all_of(quotient.generators().begin(), quotient.generators().end(),
                      [](const Monomial& g) { return g.degree() == 1; });
      if (variable_generated) {
        std::vector<int> vars;
        for (const Monomial& g : quotient.generators())
          for (int i = 0; i < n; ++i)
            if (g.exponents[i] == 1) vars.push_back(i);
        std::sort(vars.begin(), vars.end());
        primes.push_back(PrimeSupport(std::move(vars)));
      }
    }
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++t[i] <= bound[i]) break;
      t[i] = 0;
    }
    if (i < 0) break;
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const PrimeSupport& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.variables.size(); ++k) {
    if (k > 0) s += ", ";
    s += "x" + std::to_string(p.variables[k] + 1);
  }
  return s + ")";
}

std::string to_string(const IrreducibleComponent& c) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 0; i < c.exponents.size(); ++i) {
    if (c.exponents[i] == 0) continue;
    if (!first) s += ", ";
    first = false;
    s += "x" + std::to_string(i + 1);
    if (c.exponents[i] > 1) s += "^" + std::to_string(c.exponents[i]);
  }
  return s + ")";
}

}  // namespace coverideal
