#pragma once

#include "qcert/mod_poly.hpp"
#include "qcert/poly.hpp"

namespace qcert {

/// Resultant Res(a, b) = lc(a)^deg b * prod b(alpha), alpha over roots of a,
/// by the subresultant pseudo-remainder sequence. Works over any integral
/// domain with exact division (Int, Rat, IntPoly).
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  using T = RingTraits<R>;
  if (a.is_zero() || b.is_zero()) return T::zero();
  R sign = T::one();
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = R(T::zero() - sign);
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R r = T::one();
    for (int i = 0; i < a.degree(); ++i) r = r * b.lead();
    return r * sign;
  }
  R g = T::one(), h = T::one();
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = R(T::zero() - sign);
    Poly<R> r = a.pseudo_rem(b);
    a = std::move(b);
    R div = g;
    for (int i = 0; i < delta; ++i) div = div * h;
    if (r.is_zero()) return T::zero();
    std::vector<R> rc = r.coeffs();
    for (auto& c : rc) c = T::exact_div(c, div);
    b = Poly<R>(std::move(rc));
    g = a.lead();
    // h <- g^delta / h^(delta - 1); unchanged when delta == 0
    if (delta > 0) {
      R num = T::one(), den = T::one();
      for (int i = 0; i < delta; ++i) num = num * g;
      for (int i = 0; i < delta - 1; ++i) den = den * h;
      h = T::exact_div(num, den);
    }
    if (b.degree() == 0) {
      const int da = a.degree();
      R num = T::one(), den = T::one();
      for (int i = 0; i < da; ++i) num = num * b.lead();
      for (int i = 0; i < da - 1; ++i) den = den * h;
      return T::exact_div(num, den) * sign;
    }
  }
}

/// Resultant over a finite field by the Euclidean algorithm.
FiniteField::Elem resultant(const ModPoly& a, const ModPoly& b);

/// Discriminant of an integer polynomial of degree >= 1:
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Int discriminant(const IntPoly& f);

/// Reduction of an integer polynomial modulo the characteristic of F.
ModPoly reduce(const IntPoly& f, const FieldPtr& F);

/// Irreducibility of f mod l. Throws std::invalid_argument when l divides
/// the leading coefficient (the reduction would drop degree).
bool is_irreducible_mod(const IntPoly& f, std::uint64_t l);

}  // namespace qcert
