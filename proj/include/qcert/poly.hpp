#pragma once

// Dense univariate polynomials over an exact ring R, low degree first.
//
// R is Int, Rat, or Poly<Int> (giving bivariate integer polynomials). Ring
// specifics live in RingTraits<R>: zero/one, zero test, and exact division
// (a / b where b is known to divide a).

#include "qcert/integer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Int> {
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
  static Int from_long(long v) { return Int(v); }
  static bool is_zero(const Int& a) { return a == 0; }
  static Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

template <>
struct RingTraits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_long(long v) { return Rat(v); }
  static bool is_zero(const Rat& a) { return a == 0; }
  static Rat exact_div(const Rat& a, const Rat& b) { return Rat(a / b); }
};

template <class R>
class Poly {
 public:
  using Traits = RingTraits<R>;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }
  static Poly monomial(R c, std::size_t degree) {
    std::vector<R> v(degree + 1, Traits::zero());
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(Traits::one(), 1); }

  const std::vector<R>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Traits::zero(); }
  const R& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator+(const Poly& o) const {
    std::vector<R> v(std::max(c_.size(), o.c_.size()), Traits::zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(v));
  }
  Poly operator-(const Poly& o) const {
    std::vector<R> v(std::max(c_.size(), o.c_.size()), Traits::zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(v));
  }
  Poly operator-() const {
    std::vector<R> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = R(Traits::zero() - c_[i]);
    return Poly(std::move(v));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<R> v(c_.size() + o.c_.size() - 1, Traits::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (Traits::is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
    }
    return Poly(std::move(v));
  }
  Poly scaled(const R& s) const {
    std::vector<R> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c_[i] * s;
    return Poly(std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly r = constant(Traits::one()), b = *this;
    while (e != 0) {
      if (e & 1U) r = r * b;
      b = b * b;
      e >>= 1U;
    }
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Traits::from_long(static_cast<long>(i));
    return Poly(std::move(v));
  }

  template <class S>
  S eval(const S& x) const {
    S r = S(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = S(r * x + S(c_[i]));
    return r;
  }
  R eval(const R& x) const { return eval<R>(x); }

  /// Quotient by a divisor that is known to divide exactly.
  Poly exact_div(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return Poly();
    if (degree() < d.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<R> r = c_;
    const auto dd = static_cast<std::size_t>(d.degree());
    std::vector<R> quot(r.size() - dd, Traits::zero());
    for (std::size_t k = r.size(); k-- > dd;) {
      if (Traits::is_zero(r[k])) continue;
      R c = Traits::exact_div(r[k], d.lead());
      for (std::size_t i = 0; i <= dd; ++i) r[k - dd + i] = r[k - dd + i] - c * d.c_[i];
      quot[k - dd] = std::move(c);
    }
    for (std::size_t i = 0; i < dd; ++i) {
      if (!Traits::is_zero(r[i])) throw std::logic_error("inexact polynomial division");
    }
    return Poly(std::move(quot));
  }

  /// Pseudo-remainder: lc(d)^(deg this - deg d + 1) * this mod d.
  Poly pseudo_rem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (degree() < d.degree()) return *this;
    Poly r = *this;
    int e = degree() - d.degree() + 1;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Poly s = monomial(r.lead(), static_cast<std::size_t>(r.degree() - d.degree()));
      r = r.scaled(d.lead()) - s * d;
      --e;
    }
    R f = Traits::one();
    for (int i = 0; i < e; ++i) f = f * d.lead();
    return r.scaled(f);
  }

 private:
  void normalize() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;
/// Polynomial in an outer variable whose coefficients are IntPoly in an
/// inner variable.
using BiPoly = Poly<IntPoly>;

template <>
struct RingTraits<IntPoly> {
  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly::constant(Int(1)); }
  static IntPoly from_long(long v) { return IntPoly::constant(Int(v)); }
  static bool is_zero(const IntPoly& a) { return a.is_zero(); }
  static IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return a.exact_div(b); }
};

std::string to_string(const IntPoly& f, char var = 'x');
std::string to_string(const RatPoly& f, char var = 'x');

RatPoly to_rat(const IntPoly& f);
/// Content (gcd of coefficients, positive); zero for the zero polynomial.
Int content(const IntPoly& f);
/// Divide a rational polynomial by its leading coefficient.
RatPoly monic(const RatPoly& f);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// f / gcd(f, f'), monic.
RatPoly squarefree_part(const RatPoly& f);

/// Number of distinct real roots in the half-open interval (lo, hi], by
/// Sturm's theorem. lo/hi absent means -inf/+inf.
int count_real_roots(const RatPoly& f, const Rat* lo = nullptr, const Rat* hi = nullptr);

}  // namespace qcert
