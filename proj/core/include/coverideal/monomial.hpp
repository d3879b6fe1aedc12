#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace coverideal {

/// Monomial in a fixed polynomial ring k[x_1..x_n], stored as its exponent
/// vector. The ambient variable count is the vector length; every operation
/// requires matching lengths. Exponents are non-negative.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }

  /// Squarefree monomial whose support is `vars` (0-based, need not be sorted).
  static Monomial of_support(int n, const std::vector<int>& vars);

  int size() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  bool is_constant() const { return degree() == 0; }
  bool is_squarefree() const;

  bool divides(const Monomial& m) const;

  /// this / gcd(this, m); exponentwise max(e_i - m_i, 0).
  Monomial quotient_by_gcd(const Monomial& m) const;

  Monomial pow(int k) const;

  std::vector<int> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  // canonical order: lexicographic on exponent vectors
  auto operator<=>(const Monomial&) const = default;
};

/// Support of a monomial prime ideal (x_{i_1}, .., x_{i_r}); 0-based sorted
/// variable indices, never empty in computed results.
struct PrimeSupport {
  std::vector<int> variables;

  PrimeSupport() = default;
  explicit PrimeSupport(std::vector<int> v) : variables(std::move(v)) {}

  int height() const { return static_cast<int>(variables.size()); }
  bool contains(const PrimeSupport& other) const;  // other subset of this

  auto operator<=>(const PrimeSupport&) const = default;
};

/// Irreducible monomial ideal m^b = (x_i^{b_i} : b_i >= 1), stored as b.
struct IrreducibleComponent {
  std::vector<int> exponents;

  IrreducibleComponent() = default;
  explicit IrreducibleComponent(std::vector<int> e) : exponents(std::move(e)) {}

  PrimeSupport support() const;

  auto operator<=>(const IrreducibleComponent&) const = default;
};

/// Monomial ideal given by its unique minimal generating set, kept as a
/// divisibility antichain sorted lexicographically. The zero ideal has no
/// generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  /// Minimalizes: drops duplicates and any generator divisible by another.
  MonomialIdeal(int n, std::vector<Monomial> generators);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }

  int ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_constant(); }

  /// Membership: some minimal generator divides m.
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int n, std::vector<Monomial> generators);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int s);  // s = 0 gives the unit ideal
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// m^b as an ideal in n variables; b all zero gives the zero ideal.
MonomialIdeal irreducible_ideal(int n, const IrreducibleComponent& component);

/// Alexander dual with respect to x^a: the intersection over all minimal
/// generators x^b of the irreducible ideal with exponents a_i + 1 - b_i where
/// b_i >= 1 (coordinates with b_i = 0 are dropped). Every minimal generator
/// must divide x^a. Dual of the zero ideal is the unit ideal and vice versa.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const std::vector<int>& a);

/// Unique irredundant decomposition I = intersection of m^b, computed through
/// the dual taken at a = exponentwise max of the generators. Zero ideal errors;
/// the unit ideal yields the empty intersection.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Supports of the irredundant irreducible components, deduplicated, sorted.
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal);

/// Definition-level oracle: enumerates monomials T dividing x^bound with
/// T not in I and keeps the supports of those colon ideals I : T generated by
/// variables. Exponential in bound; intended for cross-checking only.
std::vector<PrimeSupport> associated_primes_witness(const MonomialIdeal& ideal,
                                                    const std::vector<int>& bound);

std::string to_string(const Monomial& m);
std::string to_string(const PrimeSupport& p);
std::string to_string(const IrreducibleComponent& c);

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }
inline std::ostream& operator<<(std::ostream& os, const PrimeSupport& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const IrreducibleComponent& c) { return os << to_string(c); }

}  // namespace coverideal
