#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/curve.hpp"
#include "qcert/resultant.hpp"
#include "support.hpp"

#include <cmath>

using namespace qcert;
using qcert::testing::bundled_curve;
using qcert::testing::table_lpolys;

namespace {

TernaryQuarticForm form(std::initializer_list<std::tuple<unsigned, unsigned, unsigned, long>> terms) {
  TernaryForm f(4);
  for (auto [i, j, k, c] : terms) f.set(i, j, k, Int(c));
  return TernaryQuarticForm(f);
}

TernaryQuarticForm fermat() { return form({{4, 0, 0, 1}, {0, 4, 0, 1}, {0, 0, 4, 1}}); }

// The model with the bad-fiber nodes moved onto the line x = 0.
TernaryQuarticForm g_model() {
  using A = std::array<std::array<Int, 3>, 3>;
  A m{{{Int(1), Int(-69), Int(-1389)}, {Int(0), Int(1), Int(-64)}, {Int(0), Int(0), Int(1)}}};
  return bundled_curve().substitute(m);
}

std::vector<std::string> point_strings(const SingularFiberReport& r) {
  const auto K = make_field(r.p, 2);
  std::vector<std::string> out;
  for (const auto& sp : r.points) out.push_back(to_string(sp.point, *K));
  return out;
}

}  // namespace

TEST_CASE("curve file round trip and irreducibility") {
  const auto& f = bundled_curve();
  CHECK(curve_from_json(curve_to_json(f)) == f);
  CHECK(certify_irreducible(f));
  // (x^2 + y^2 + z^2)(x^2 - y z) is reducible
  const auto red = form({{4, 0, 0, 1}, {2, 2, 0, 1}, {2, 0, 2, 1}, {2, 1, 1, -1}, {0, 3, 1, -1}, {0, 1, 3, -1}});
  CHECK_FALSE(certify_irreducible(red));
  CHECK_THROWS(curve_from_json(curve_to_json(red)));
}

TEST_CASE("point counts") {
  const auto& f = bundled_curve();
  CHECK(count_points(f, 2, 1) == 6);
  CHECK(count_points(f, 2, 2) == 8);
  CHECK(count_points(f, 3, 1) == 5);
  // line-by-line counting agrees with enumeration of P^2 for p^m <= 1000
  for (std::uint64_t p : {2u, 3u, 5u, 17u, 19u, 23u})
    for (unsigned m = 1; m <= 3; ++m) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < m; ++i) q *= p;
      if (q > 1000) continue;
      CAPTURE(p);
      CAPTURE(m);
      CHECK(count_points(f, p, m) == count_points_bruteforce(f, p, m));
      CHECK(count_points(f, p, m, {.parallel = false}) == count_points(f, p, m));
    }
  CHECK_THROWS_AS(count_points(f, 7, 1), BadReduction);
  CHECK_THROWS_AS(count_points(f, 73, 4), BudgetExceeded);
}

TEST_CASE("L-polynomial invariants") {
  const auto& f = bundled_curve();
  for (const auto& L : table_lpolys()) {
    CAPTURE(L.p);
    // T^6 P(p/T) = p^3 P(T)
    const IntPoly P = L.poly();
    const Int p(static_cast<unsigned long>(L.p));
    for (int i = 0; i <= 6; ++i) CHECK(P.coeff(i) * int_pow(p, static_cast<unsigned long>(i)) == P.coeff(6 - i) * int_pow(p, 3));
    CHECK(satisfies_weil_bounds(L));
    CHECK(std::abs(L.a.get_d()) <= 6 * std::sqrt(double(L.p)));
    if (L.p <= 23) {
      const auto s = L.power_sums();
      Int q(1);
      for (unsigned m = 1; m <= 3; ++m) {
        q *= p;
        const auto N = count_points(f, L.p, m);
        CHECK(Int(static_cast<unsigned long>(N)) == q + 1 - s[m - 1]);
        CHECK(std::abs(double(N) - (q.get_d() + 1)) <= 6 * std::pow(double(L.p), m / 2.0));
      }
    }
  }
  CHECK_FALSE(satisfies_weil_bounds(qcert::testing::lp(2, 9, 0, 0)));
}

TEST_CASE("bad-prime candidates") {
  const Int B = find_bad_prime_candidates(bundled_curve());
  for (long q : {7, 11, 83}) CHECK(B % q == 0);
  // Fermat: only 2 divides B
  const Int BF = find_bad_prime_candidates(fermat());
  CHECK(odd_prime_support(BF).empty());
  // integer content d divides B
  const auto f3 = TernaryQuarticForm(bundled_curve().scaled(Int(15)));
  CHECK(find_bad_prime_candidates(f3) % 15 == 0);
  // every prime with a singular fiber divides B
  for (auto p : primes_up_to(100)) {
    const auto r = singular_points(bundled_curve(), p);
    if (!r.points.empty()) CHECK(B % static_cast<unsigned long>(p) == 0);
  }
}

TEST_CASE("singular points of the bundled model") {
  const auto& f = bundled_curve();
  CHECK(point_strings(singular_points(f, 7)) == std::vector<std::string>{"(4:6:1)"});
  CHECK(point_strings(singular_points(f, 11)) == std::vector<std::string>{"(8:2:1)"});
  CHECK(point_strings(singular_points(f, 83)) == std::vector<std::string>{"(1:59:1)", "(55:51:1)"});
  for (std::uint64_t p : {2u, 3u, 5u, 13u}) {
    const auto r = singular_points(f, p);
    CHECK(r.complete);
    CHECK(r.points.empty());
  }
  for (std::uint64_t p : {7u, 11u, 83u}) {
    const auto r = singular_points(f, p);
    CHECK(r.complete);
    for (const auto& sp : r.points) {
      CHECK(sp.classified);
      CHECK(sp.kind.ordinary_node);
      CHECK(sp.kind.total_space_regular);
    }
  }
}

TEST_CASE("singular points in the shifted model") {
  const auto g = g_model();
  CHECK(point_strings(singular_points(g, 7)) == std::vector<std::string>{"(0:0:1)"});
  CHECK(point_strings(singular_points(g, 11)) == std::vector<std::string>{"(0:0:1)"});
  CHECK(point_strings(singular_points(g, 83)) == std::vector<std::string>{"(0:32:1)", "(0:40:1)"});
  CHECK(singular_points(g, 5).points.empty());
  for (std::array<std::uint64_t, 3> pt : {std::array<std::uint64_t, 3>{0, 32, 1}, {0, 40, 1}}) {
    const auto k = classify_node(g, 83, pt);
    CHECK(k.ordinary_node);
    CHECK(k.total_space_regular);
  }
  const auto k7 = classify_node(g, 7, {0, 0, 1});
  CHECK(k7.ordinary_node);
  CHECK(k7.total_space_regular);
  CHECK_THROWS(classify_node(g, 7, {1, 0, 1}));  // not singular
}

TEST_CASE("node classification failures") {
  // y^2 z^2 - x^3 z + x^4: a cusp at (0:0:1) over Q, so in every fiber
  const auto cusp = form({{0, 2, 2, 1}, {3, 0, 1, -1}, {4, 0, 0, 1}, {0, 4, 0, 1}});
  const auto k = classify_node(cusp, 5, {0, 0, 1});
  CHECK_FALSE(k.ordinary_node);
  // x y z^2 + 25 z^4 + x^4 + y^4: a node mod 5 at (0:0:1), but the constant term has valuation 2
  const auto deep = form({{1, 1, 2, 1}, {0, 0, 4, 25}, {4, 0, 0, 1}, {0, 4, 0, 1}});
  const auto kd = classify_node(deep, 5, {0, 0, 1});
  CHECK(kd.ordinary_node);
  CHECK_FALSE(kd.total_space_regular);
  // x y z^2 + 5 z^4 + x^4 + y^4: regular
  const auto reg = form({{1, 1, 2, 1}, {0, 0, 4, 5}, {4, 0, 0, 1}, {0, 4, 0, 1}});
  const auto kr = classify_node(reg, 5, {0, 0, 1});
  CHECK(kr.ordinary_node);
  CHECK(kr.total_space_regular);
}

TEST_CASE("Fermat quartic at 2 is not a nodal fiber") {
  const auto r = singular_points(fermat(), 2);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.note.empty());
}
