#pragma once

#include "qcert/finite_field.hpp"
#include "qcert/integer.hpp"
#include "qcert/poly.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcert {

/// Raised when an operation needs good reduction at p and the fiber is singular.
struct BadReduction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a point count would exceed the configured field-size budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an L-polynomial fails the Weil bounds (a counting bug).
struct WeilViolation : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Var { X = 0, Y = 1, Z = 2 };

/// Homogeneous polynomial in x, y, z with integer coefficients.
class TernaryForm {
 public:
  explicit TernaryForm(unsigned degree);

  unsigned degree() const { return d_; }
  const Int& coeff(unsigned i, unsigned j, unsigned k) const;
  void set(unsigned i, unsigned j, unsigned k, Int c);
  bool is_zero() const;
  Int content() const;

  TernaryForm partial(Var v) const;
  TernaryForm operator+(const TernaryForm& o) const;
  TernaryForm operator*(const TernaryForm& o) const;
  TernaryForm scaled(const Int& s) const;
  bool operator==(const TernaryForm& o) const { return d_ == o.d_ && c_ == o.c_; }

  /// The form f(M (x, y, z)^T): each variable is replaced by the linear form
  /// given by the corresponding row of M.
  TernaryForm substitute(const std::array<std::array<Int, 3>, 3>& m) const;

  Int eval(const Int& x, const Int& y, const Int& z) const;
  /// Value at a point over a finite field (coordinates are element codes).
  FiniteField::Elem eval(const FiniteField& F, FiniteField::Elem x, FiniteField::Elem y,
                         FiniteField::Elem z) const;

  /// Dehomogenize by setting `chart` to 1, and return the result as a
  /// polynomial in `outer` whose coefficients are polynomials in the
  /// remaining variable.
  BiPoly dehomogenize(Var chart, Var outer) const;

  std::string to_string() const;

 private:
  std::size_t index(unsigned i, unsigned j) const { return i * (d_ + 1) + j; }

  unsigned d_;
  std::vector<Int> c_;  // coefficient of x^i y^j z^(d-i-j) at index(i, j)
};

/// A nonzero ternary quartic form; the curve f = 0 in P^2.
class TernaryQuarticForm : public TernaryForm {
 public:
  explicit TernaryQuarticForm(const TernaryForm& f);
  TernaryQuarticForm substitute(const std::array<std::array<Int, 3>, 3>& m) const {
    return TernaryQuarticForm(TernaryForm::substitute(m));
  }
};

/// Parse {"monomials": [{"i":..,"j":..,"k":..,"coeff":"..."}]}. Rejects
/// reducible forms (see certify_irreducible) unless check_irreducible is false.
TernaryQuarticForm curve_from_json(const nlohmann::json& j, bool check_irreducible = true);
TernaryQuarticForm load_curve(const std::string& path, bool check_irreducible = true);
nlohmann::json curve_to_json(const TernaryQuarticForm& f);

/// True when a prime p and a line L over F_p are found with f restricted to
/// L an irreducible quartic over F_p; that proves f irreducible over Q.
/// False means no certificate was found in the search range.
bool certify_irreducible(const TernaryQuarticForm& f);

struct CountOptions {
  std::uint64_t budget = 10'000'000;  // largest admissible field size p^m
  bool parallel = true;
  bool check_smooth = true;  // verify good reduction before counting
};

/// |C(F_{p^m})|, counting distinct projective points line by line.
std::uint64_t count_points(const TernaryQuarticForm& f, std::uint64_t p, unsigned m,
                           const CountOptions& opts = {});
/// Reference count by enumerating all of P^2(F_{p^m}). No smoothness check.
std::uint64_t count_points_bruteforce(const TernaryQuarticForm& f, std::uint64_t p, unsigned m);

/// P(T) = T^6 + a T^5 + b T^4 + c T^3 + p b T^2 + p^2 a T + p^3.
struct LPolynomial {
  std::uint64_t p = 0;
  Int a, b, c;

  IntPoly poly() const;
  /// Q(x) = x^3 + a x^2 + (b - 3p) x + (c - 2pa), whose roots are the real
  /// numbers lambda + p/lambda over pairs of roots of P.
  IntPoly real_cubic() const;
  /// sum of lambda^m over the roots of P, m = 1, 2, 3.
  std::array<Int, 3> power_sums() const;
  bool operator==(const LPolynomial& o) const { return p == o.p && a == o.a && b == o.b && c == o.c; }
};

/// Solve 1 + aT + bT^2 + cT^3 = (1 - T)(1 - pT) exp(sum N_m T^m / m) mod T^4.
LPolynomial lpoly_from_counts(std::uint64_t p, const std::array<Int, 3>& counts);
/// All roots of P have absolute value sqrt(p), via Sturm counts on Q.
bool satisfies_weil_bounds(const LPolynomial& L);
LPolynomial l_polynomial(const TernaryQuarticForm& f, std::uint64_t p, const CountOptions& opts = {});

/// Positive integer divisible by every prime of bad reduction.
Int find_bad_prime_candidates(const TernaryQuarticForm& f);

struct ProjectivePoint {
  // Element codes in F_{p^2}; normalized so the last nonzero coordinate is 1.
  std::array<FiniteField::Elem, 3> coords;
  bool rational = false;  // all coordinates in F_p
  auto operator<=>(const ProjectivePoint&) const = default;
};

struct NodeClassification {
  bool ordinary_node = false;
  bool total_space_regular = false;
};

struct SingularPoint {
  ProjectivePoint point;
  bool classified = false;  // only F_p-rational points are classified
  NodeClassification kind;
};

struct SingularFiberReport {
  std::uint64_t p = 0;
  std::vector<SingularPoint> points;
  bool complete = false;
  std::string note;  // reason when incomplete
};

SingularFiberReport singular_points(const TernaryQuarticForm& f, std::uint64_t p);
NodeClassification classify_node(const TernaryQuarticForm& f, std::uint64_t p,
                                 const std::array<std::uint64_t, 3>& point);

std::string to_string(const ProjectivePoint& pt, const FiniteField& K);

}  // namespace qcert
