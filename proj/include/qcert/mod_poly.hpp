#pragma once

#include "qcert/finite_field.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

/// Dense univariate polynomial over a finite field, low degree first.
/// The zero polynomial has no coefficients and degree -1.
class ModPoly {
 public:
  using Elem = FiniteField::Elem;

  explicit ModPoly(FieldPtr field) : field_(std::move(field)) {}
  ModPoly(FieldPtr field, std::vector<Elem> coeffs);

  static ModPoly constant(FieldPtr field, Elem c);
  static ModPoly monomial(FieldPtr field, Elem c, std::size_t degree);
  /// x^n - 1
  static ModPoly x_pow_minus_one(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  const FiniteField& F() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  ModPoly monic() const;
  ModPoly derivative() const;
  Elem eval(Elem x) const;

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator-() const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(Elem c) const;
  bool operator==(const ModPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& d) const;
  ModPoly operator%(const ModPoly& d) const { return divmod(d).second; }
  ModPoly operator/(const ModPoly& d) const { return divmod(d).first; }

  /// this^e mod m
  ModPoly pow_mod(const Int& e, const ModPoly& m) const;
  ModPoly mul_mod(const ModPoly& o, const ModPoly& m) const { return (*this * o) % m; }

  bool is_squarefree() const;
  bool is_irreducible() const;

  struct Factor;
  /// Monic irreducible factors with multiplicities, sorted by
  /// (degree, coefficient codes). Input must be nonzero.
  std::vector<Factor> factor() const;
  /// Distinct roots in the coefficient field, ascending by code.
  std::vector<Elem> roots() const;

  /// Least n >= 1 with this | x^n - 1. Requires f(0) != 0 and f squarefree.
  Int multiplicative_order() const;

  std::string to_string(char var = 'x') const;

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Elem> c_;
};

struct ModPoly::Factor {
  ModPoly poly;
  unsigned multiplicity;
};

ModPoly gcd(const ModPoly& a, const ModPoly& b);

inline std::vector<ModPoly::Factor> factor_mod(const ModPoly& f) { return f.factor(); }
inline Int multiplicative_order(const ModPoly& f) { return f.multiplicative_order(); }

/// Result of the squarefree decomposition: f = lead * prod g_i^{m_i} with g_i
/// monic squarefree and pairwise coprime.
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (g_d, d) where g_d is the product of all irreducible factors of degree d.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree_factorization(const ModPoly& f);

/// Split a monic squarefree polynomial whose irreducible factors all have
/// degree d. Uses a fixed-seed pseudo-random stream so output is reproducible.
std::vector<ModPoly> equal_degree_factorization(const ModPoly& f, unsigned d);

/// Total order used for sorting factors: degree, then the coefficient code
/// vector compared lexicographically from the constant term up.
bool factor_less(const ModPoly& a, const ModPoly& b);

}  // namespace qcert
