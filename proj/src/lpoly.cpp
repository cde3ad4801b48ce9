#include "qcert/curve.hpp"
#include "qcert/series.hpp"

namespace qcert {

IntPoly LPolynomial::poly() const {
  const Int P(static_cast<unsigned long>(p));
  return IntPoly({P * P * P, P * P * a, P * b, c, b, a, Int(1)});
}

IntPoly LPolynomial::real_cubic() const {
  const Int P(static_cast<unsigned long>(p));
  return IntPoly({c - 2 * P * a, b - 3 * P, a, Int(1)});
}

// Newton's identities with e1 = -a, e2 = b, e3 = -c.
std::array<Int, 3> LPolynomial::power_sums() const {
  const Int e1 = -a, e2 = b, e3 = -c;
  const Int s1 = e1;
  const Int s2 = e1 * s1 - 2 * e2;
  const Int s3 = e1 * s2 - e2 * s1 + 3 * e3;
  return {s1, s2, s3};
}

LPolynomial lpoly_from_counts(std::uint64_t p, const std::array<Int, 3>& counts) {
  const TruncatedSeries z = log_series_from_counts({counts[0], counts[1], counts[2]}, 4).exp();
  TruncatedSeries factor(4);
  factor[0] = 1;
  factor[1] = -Rat(static_cast<long>(p)) - 1;
  factor[2] = Rat(static_cast<long>(p));
  const TruncatedSeries prod = z * factor;
  for (std::size_t i = 0; i < 4; ++i) {
    if (prod[i].get_den() != 1) throw std::logic_error("point counts do not come from a genus-3 zeta function");
  }
  LPolynomial L;
  L.p = p;
  L.a = prod[1].get_num();
  L.b = prod[2].get_num();
  L.c = prod[3].get_num();
  return L;
}

bool satisfies_weil_bounds(const LPolynomial& L) {
  const RatPoly q = squarefree_part(to_rat(L.real_cubic()));
  if (count_real_roots(q) != q.degree()) return false;
  // Roots t = alpha^2 of q(x) q(-x) = E(t)^2 - t O(t)^2, where q(x) = E(x^2) + x O(x^2).
  std::vector<Rat> ev, od;
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) (i % 2 == 0 ? ev : od).push_back(q.coeffs()[i]);
  const RatPoly E(ev), O(od);
  const RatPoly w = E * E - RatPoly::x() * O * O;
  const Rat bound(static_cast<long>(4 * L.p));
  return count_real_roots(w, &bound, nullptr) == 0;
}

LPolynomial l_polynomial(const TernaryQuarticForm& f, std::uint64_t p, const CountOptions& opts) {
  if (opts.check_smooth) {
    const auto rep = singular_points(f, p);
    if (!rep.complete || !rep.points.empty()) throw BadReduction("curve has bad reduction at " + std::to_string(p));
  }
  CountOptions inner = opts;
  inner.check_smooth = false;
  std::array<Int, 3> counts;
  for (unsigned m = 1; m <= 3; ++m) counts[m - 1] = Int(static_cast<unsigned long>(count_points(f, p, m, inner)));
  const LPolynomial L = lpoly_from_counts(p, counts);
  if (!satisfies_weil_bounds(L)) {
    throw WeilViolation("L-polynomial at p = " + std::to_string(p) + " violates the Weil bounds");
  }
  return L;
}

}  // namespace qcert
