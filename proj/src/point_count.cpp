#include "qcert/curve.hpp"

#include <omp.h>

#include <array>

namespace qcert {

namespace {

// Distinct roots in F of polynomials of degree <= 4, and the line-by-line
// count built on it. Fd is FiniteField or ZechField.
template <class Fd>
class LineCounter {
 public:
  using E = typename Fd::Elem;

  LineCounter(const Fd& F, const std::array<std::array<E, 5>, 5>& c) : F_(F), c_(c), q_(F.order()) {}

  // f(x0, y, 1) has y^j coefficient sum_i c[i][j] x0^i.
  std::uint64_t affine_line(std::uint64_t idx) const {
    const E x0 = F_.element(idx);
    std::array<E, 5> xp{};
    xp[0] = F_.one();
    for (unsigned i = 1; i <= 4; ++i) xp[i] = F_.mul(xp[i - 1], x0);
    std::array<E, 5> g{};
    for (unsigned j = 0; j <= 4; ++j) {
      E s = F_.zero();
      for (unsigned i = 0; i + j <= 4; ++i) s = F_.add(s, F_.mul(c_[i][j], xp[i]));
      g[j] = s;
    }
    const int deg = degree(g);
    if (deg < 0) throw std::domain_error("a vertical line lies on the curve; the form is reducible");
    return distinct_roots(g, deg);
  }

  // Points with z = 0: (x:1:0) from f(x, 1, 0), and (1:0:0).
  std::uint64_t at_infinity() const {
    std::array<E, 5> h{};
    for (unsigned i = 0; i <= 4; ++i) h[i] = c_[i][4 - i];
    const int deg = degree(h);
    if (deg < 0) throw std::domain_error("the line z = 0 lies on the curve; the form is reducible");
    return distinct_roots(h, deg) + (c_[4][0] == F_.zero() ? 1 : 0);
  }

 private:
  using P = std::array<E, 5>;

  int degree(const P& g) const {
    for (int d = 4; d >= 0; --d) {
      if (g[static_cast<std::size_t>(d)] != F_.zero()) return d;
    }
    return -1;
  }

  // a * b mod the monic m of degree n (a, b reduced, length n).
  void mulmod(const P& a, const P& b, const P& m, int n, P& out) const {
    std::array<E, 9> prod{};
    prod.fill(F_.zero());
    for (int i = 0; i < n; ++i) {
      if (a[static_cast<std::size_t>(i)] == F_.zero()) continue;
      for (int j = 0; j < n; ++j) {
        prod[static_cast<std::size_t>(i + j)] =
            F_.add(prod[static_cast<std::size_t>(i + j)], F_.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
      }
    }
    for (int k = 2 * n - 2; k >= n; --k) {
      const E t = prod[static_cast<std::size_t>(k)];
      if (t == F_.zero()) continue;
      for (int i = 0; i < n; ++i) {
        prod[static_cast<std::size_t>(k - n + i)] =
            F_.sub(prod[static_cast<std::size_t>(k - n + i)], F_.mul(t, m[static_cast<std::size_t>(i)]));
      }
    }
    for (int i = 0; i < 5; ++i) out[static_cast<std::size_t>(i)] = i < n ? prod[static_cast<std::size_t>(i)] : F_.zero();
  }

  // deg gcd(g, y^q - y).
  std::uint64_t distinct_roots(P g, int n) const {
    if (n == 0) return 0;
    if (n == 1) return 1;
    const E inv = F_.inv(g[static_cast<std::size_t>(n)]);
    for (int i = 0; i <= n; ++i) g[static_cast<std::size_t>(i)] = F_.mul(g[static_cast<std::size_t>(i)], inv);
    // y^q mod g by left-to-right square-and-multiply.
    P r{}, y{};
    r.fill(F_.zero());
    y.fill(F_.zero());
    r[0] = F_.one();
    y[1] = F_.one();
    for (int bit = 63 - __builtin_clzll(q_); bit >= 0; --bit) {
      mulmod(r, r, g, n, r);
      if ((q_ >> bit) & 1U) mulmod(r, y, g, n, r);
    }
    r[1] = F_.sub(r[1], F_.one());
    // Euclid on (g, r).
    P a = g, b = r;
    int da = n, db = degree(b);
    while (db >= 0) {
      const E binv = F_.inv(b[static_cast<std::size_t>(db)]);
      while (da >= db) {
        const E t = F_.mul(a[static_cast<std::size_t>(da)], binv);
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
          a[static_cast<std::size_t>(i + shift)] =
              F_.sub(a[static_cast<std::size_t>(i + shift)], F_.mul(t, b[static_cast<std::size_t>(i)]));
        }
        da = degree(a);
        if (da < 0) break;
      }
      std::swap(a, b);
      std::swap(da, db);
    }
    return static_cast<std::uint64_t>(da);
  }

  const Fd& F_;
  std::array<std::array<E, 5>, 5> c_;
  std::uint64_t q_;
};

template <class Fd, class FromInt>
std::uint64_t run_count(const Fd& F, const TernaryQuarticForm& f, FromInt from_int, bool parallel) {
  std::array<std::array<typename Fd::Elem, 5>, 5> c{};
  for (unsigned i = 0; i <= 4; ++i) {
    for (unsigned j = 0; j <= 4; ++j) c[i][j] = i + j <= 4 ? from_int(f.coeff(i, j, 4 - i - j)) : F.zero();
  }
  const LineCounter<Fd> counter(F, c);
  const std::uint64_t q = F.order();
  std::uint64_t total = counter.at_infinity();
  if (parallel) {
    std::uint64_t affine = 0;
    bool failed = false;
#pragma omp parallel for reduction(+ : affine) schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(q); ++idx) {
      try {
        affine += counter.affine_line(static_cast<std::uint64_t>(idx));
      } catch (const std::domain_error&) {
#pragma omp atomic write
        failed = true;
      }
    }
    if (failed) throw std::domain_error("a vertical line lies on the curve; the form is reducible");
    total += affine;
  } else {
    for (std::uint64_t idx = 0; idx < q; ++idx) total += counter.affine_line(idx);
  }
  return total;
}

}  // namespace

std::uint64_t count_points(const TernaryQuarticForm& f, std::uint64_t p, unsigned m, const CountOptions& opts) {
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  // Budget check before building any field.
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > opts.budget / p) throw BudgetExceeded("field size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds budget");
    q *= p;
  }
  if (opts.check_smooth) {
    const auto rep = singular_points(f, p);
    if (!rep.complete || !rep.points.empty()) {
      throw BadReduction("curve has bad reduction at " + std::to_string(p));
    }
  }
  const FieldPtr F = make_field(p, m);
  if (F->has_tables()) {
    const ZechField Z(*F);
    return run_count(Z, f, [&](const Int& v) { return Z.from_code(F->from_int(v)); }, opts.parallel);
  }
  return run_count(*F, f, [&](const Int& v) { return F->from_int(v); }, opts.parallel);
}

std::uint64_t count_points_bruteforce(const TernaryQuarticForm& f, std::uint64_t p, unsigned m) {
  const FieldPtr F = make_field(p, m);
  const std::uint64_t q = F->order();
  std::uint64_t n = 0;
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) n += f.eval(*F, x, y, 1) == 0 ? 1 : 0;
  }
  for (std::uint64_t x = 0; x < q; ++x) n += f.eval(*F, x, 1, 0) == 0 ? 1 : 0;
  n += f.eval(*F, 1, 0, 0) == 0 ? 1 : 0;
  return n;
}

}  // namespace qcert
