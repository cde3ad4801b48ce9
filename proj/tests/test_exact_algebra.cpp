#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/integer.hpp"
#include "qcert/mod_poly.hpp"
#include "qcert/resultant.hpp"
#include "qcert/series.hpp"
#include "support.hpp"

#include <random>

using namespace qcert;
using qcert::testing::ip;

namespace {

ModPoly mp(const FieldPtr& F, std::initializer_list<std::uint64_t> c) { return ModPoly(F, std::vector<std::uint64_t>(c)); }

// Sylvester determinant over Q, an independent resultant oracle.
Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int s = m + n;
  std::vector<std::vector<Rat>> M(s, std::vector<Rat>(s, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = Rat(f.coeff(m - j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = Rat(g.coeff(n - j));
  Rat det(1);
  for (int c = 0; c < s; ++c) {
    int piv = -1;
    for (int r = c; r < s; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Int(0);
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < s; ++r) {
      Rat t = M[r][c] / M[c][c];
      for (int k = c; k < s; ++k) M[r][k] -= t * M[c][k];
    }
  }
  return Int(det.get_num());
}

IntPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Int> c(deg + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

}  // namespace

TEST_CASE("integer factorization and support") {
  const auto f = factor(Int(4860));
  CHECK(f == std::map<Int, unsigned>{{2, 2}, {3, 5}, {5, 1}});
  CHECK(odd_prime_support(Int(-408)) == std::set<Int>{3, 17});
  const Int big = Int("1000000007") * Int("998244353") * Int(7) * Int(7);
  CHECK(factor(big) == std::map<Int, unsigned>{{7, 2}, {Int("998244353"), 1}, {Int("1000000007"), 1}});
  CHECK(valuation(Int(6391 * 49), Int(7)) == 3);
  CHECK_THROWS(factor(Int(0)));
}

TEST_CASE("finite field canonical modulus and arithmetic") {
  const auto F4 = make_field(2, 2);
  CHECK(F4->modulus() == std::vector<std::uint64_t>{1, 1, 1});  // t^2 + t + 1
  const auto F9 = make_field(3, 2);
  CHECK(F9->modulus() == std::vector<std::uint64_t>{1, 0, 1});  // t^2 + 1
  for (std::uint64_t p : {2u, 3u, 5u, 7u})
    for (unsigned m : {1u, 2u, 3u}) {
      const auto F = make_field(p, m);
      for (std::uint64_t a = 1; a < F->order(); ++a) {
        CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->pow(a, F->order() - 1) == 1);
      }
    }
}

TEST_CASE("factorization round trip and ordering") {
  std::mt19937_64 rng(7);
  for (std::uint64_t l : {2u, 3u, 5u, 17u, 83u}) {
    const auto F = make_field(l);
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::uint64_t> d(0, l - 1);
      std::vector<std::uint64_t> c(1 + trial % 9);
      for (auto& x : c) x = d(rng);
      c.push_back(1 + d(rng) % (l - 1));
      const ModPoly f(F, c);
      const auto fs = f.factor();
      ModPoly prod = ModPoly::constant(F, f.lead());
      for (std::size_t i = 0; i < fs.size(); ++i) {
        CHECK(fs[i].poly.is_irreducible());
        CHECK(fs[i].poly.is_monic());
        for (unsigned k = 0; k < fs[i].multiplicity; ++k) prod = prod * fs[i].poly;
        if (i > 0) CHECK(factor_less(fs[i - 1].poly, fs[i].poly));
      }
      CHECK(prod == f);
      CHECK(f.is_irreducible() == (fs.size() == 1 && fs[0].multiplicity == 1));
    }
  }
}

TEST_CASE("irreducibility mod l on table polynomials") {
  using qcert::testing::table_lpoly;
  CHECK(is_irreducible_mod(table_lpoly(17).poly(), 3));
  CHECK(is_irreducible_mod(table_lpoly(2).poly(), 7));
  CHECK(is_irreducible_mod(table_lpoly(2).poly(), 11));
  CHECK(is_irreducible_mod(table_lpoly(2).poly(), 41));
  CHECK_FALSE(is_irreducible_mod(ip({-1, 0, 1}), 5));
  CHECK_THROWS_AS(is_irreducible_mod(ip({1, 5}), 5), std::invalid_argument);
}

TEST_CASE("multiplicative order") {
  using qcert::testing::table_lpoly;
  const auto F2 = make_field(2);
  CHECK(reduce(table_lpoly(23).poly(), F2).multiplicative_order() == 7);
  CHECK(reduce(table_lpoly(73).poly(), F2).multiplicative_order() == 15);
  CHECK(mp(F2, {1, 1}).multiplicative_order() == 1);
  CHECK_THROWS(mp(F2, {0, 1, 1}).multiplicative_order());     // f(0) = 0
  CHECK_THROWS(mp(F2, {1, 0, 1}).multiplicative_order());     // (x+1)^2
  // n is minimal: f | x^n - 1 and f does not divide x^d - 1 for d | n, d < n
  const auto F3 = make_field(3);
  for (const auto& f : {mp(F3, {2, 1, 1}), mp(F3, {1, 0, 1}), mp(F3, {1, 2, 0, 1}), mp(F3, {2, 0, 0, 0, 1})}) {
    const auto n = to_u64(f.multiplicative_order());
    CHECK((ModPoly::x_pow_minus_one(F3, n) % f).is_zero());
    for (std::uint64_t d = 1; d < n; ++d)
      if (n % d == 0) CHECK_FALSE((ModPoly::x_pow_minus_one(F3, d) % f).is_zero());
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(ip({0, 1}), ip({-1, 1})) == -1);
  CHECK(resultant(ip({-1, 0, 1}), ip({-3, 0, 3, 1})) == -1);
  CHECK(resultant(IntPoly(), ip({1, 1})) == 0);
  // degree-1 sanity: Res(x - t, Q) = Q(t)
  const IntPoly Q = ip({-3, 0, 3, 1});
  for (long t = -5; t <= 5; ++t) CHECK(resultant(ip({-t, 1}), Q) == Q.eval(Int(t)));
}

TEST_CASE("resultant against Sylvester determinant and root products") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly f = random_poly(rng, 1 + trial % 4), g = random_poly(rng, 1 + (trial / 4) % 4),
                  h = random_poly(rng, 1 + (trial / 16) % 3);
    const Int r = resultant(f, g);
    CHECK(r == sylvester_resultant(f, g));
    const int sgn = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
    CHECK(resultant(g, f) == sgn * r);
    CHECK(resultant(f, g * h) == r * resultant(f, h));
    for (std::uint64_t l : {101u, 65537u}) {
      const auto F = make_field(l);
      if (mod_u64(f.lead(), l) == 0 || mod_u64(g.lead(), l) == 0) continue;
      CHECK(resultant(reduce(f, F), reduce(g, F)) == mod_u64(r, l));
    }
  }
  // for a split f = prod (x - r_i), Res(f, g) = prod g(r_i)
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> d(-6, 6);
    IntPoly f = ip({1});
    std::vector<long> roots;
    for (int i = 0; i < 1 + trial % 4; ++i) {
      roots.push_back(d(rng));
      f = f * ip({-roots.back(), 1});
    }
    const IntPoly g = random_poly(rng, 1 + trial % 4);
    Int prod(1);
    for (long x : roots) prod *= g.eval(Int(x));
    CHECK(resultant(f, g) == prod);
  }
}

TEST_CASE("truncated series") {
  const TruncatedSeries zero(4);
  CHECK(zero.exp() == TruncatedSeries({Rat(1), Rat(0), Rat(0), Rat(0)}));
  TruncatedSeries t(4);
  t[1] = 1;
  CHECK(t.exp() == TruncatedSeries({Rat(1), Rat(1), Rat(1, 2), Rat(1, 6)}));
  TruncatedSeries nz(3);
  nz[0] = 1;
  CHECK_THROWS(nz.exp());
  TruncatedSeries s(6);
  s[0] = 1;
  s[1] = 3;
  s[2] = Rat(-2, 5);
  s[5] = 7;
  for (std::size_t D = 1; D <= 6; ++D) {
    std::vector<Rat> c(s.coeffs().begin(), s.coeffs().begin() + D);
    CHECK(TruncatedSeries(c).log().exp() == TruncatedSeries(c));
  }
}

TEST_CASE("zeta congruence at p = 2") {
  const auto L = lpoly_from_counts(2, {Int(6), Int(8), Int(9)});
  CHECK(L.a == 3);
  CHECK(L.b == 6);
  CHECK(L.c == 9);
}
