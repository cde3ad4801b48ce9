#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/hecke_data.hpp"
#include "qcert/modsym.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace qcert;
using qcert::testing::data_path;
using qcert::testing::ip;

namespace {

using PF = PrimeField;
const PF kField(2147483629u);

DenseMatrix<PF> mul(const PF& F, const DenseMatrix<PF>& A, const DenseMatrix<PF>& B) {
  DenseMatrix<PF> C(A.rows, B.cols, 0);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k)
      for (std::size_t j = 0; j < B.cols; ++j) C(i, j) = F.add(C(i, j), F.mul(A(i, k), B(k, j)));
  return C;
}

// det(t I - A) by Gaussian elimination over the prime field.
std::uint32_t det_shifted(const PF& F, DenseMatrix<PF> A, std::uint32_t t) {
  const std::size_t n = A.rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = F.sub(i == j ? t : 0, A(i, j));
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, A(c, c));
    const auto inv = F.inv(A(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const auto m = F.mul(A(r, c), inv);
      for (std::size_t j = c; j < n; ++j) A(r, j) = F.sub(A(r, j), F.mul(m, A(c, j)));
    }
  }
  return det;
}

// Cusps of X_0(N) up to the star involution a/c -> -a/c.
std::uint64_t plus_cusp_count(std::uint64_t N) {
  auto phi = [](std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        while (n % p == 0) n /= p;
        r -= r / p;
      }
    if (n > 1) r -= r / n;
    return r;
  };
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= N; ++d)
    if (N % d == 0) {
      const auto g = std::gcd(d, N / d);
      s += g <= 2 ? 1 : phi(g) / 2;
    }
  return s;
}

}  // namespace

TEST_CASE("genus formula") {
  CHECK(genus_x0(1) == 0);
  CHECK(genus_x0(11) == 1);
  CHECK(genus_x0(37) == 2);
  CHECK(genus_x0(64) == 3);
  CHECK(genus_x0(6391) == 669);  // mu = 8064, 8 cusps, no elliptic points
}

TEST_CASE("P1(Z/N) indexing") {
  for (std::uint64_t N : {1u, 2u, 12u, 49u, 77u, 360u}) {
    const P1List P(N);
    std::uint64_t psi = N;
    std::uint64_t n = N;
    for (std::uint64_t p = 2; p <= n; ++p)
      if (n % p == 0) {
        psi = psi / p * (p + 1);
        while (n % p == 0) n /= p;
      }
    CHECK(P.size() == psi);
    for (std::size_t i = 0; i < P.size(); ++i) {
      const auto [c, d] = P.rep(i);
      CHECK(P.index(c, d) == i);
      for (std::int64_t u = 1; u < static_cast<std::int64_t>(N); ++u)
        if (std::gcd<std::int64_t>(u, N) == 1) CHECK(P.index(c * u, d * u) == i);
    }
  }
}

TEST_CASE("Merel matrices against brute force") {
  for (std::uint64_t n : {2u, 3u, 5u, 7u, 13u}) {
    std::set<std::array<std::int64_t, 4>> brute;
    const auto m = static_cast<std::int64_t>(n);
    for (std::int64_t a = 1; a <= m; ++a)
      for (std::int64_t b = 0; b < a; ++b)
        for (std::int64_t d = 1; d <= m; ++d)
          for (std::int64_t c = 0; c < d; ++c)
            if (a * d - b * c == m) brute.insert({a, b, c, d});
    const auto got = merel_matrices(n);
    CHECK(std::set<std::array<std::int64_t, 4>>(got.begin(), got.end()) == brute);
    CHECK(got.size() == brute.size());
  }
  CHECK(merel_matrices(2).size() == 4);
  CHECK(merel_matrices(3).size() == 7);
}

TEST_CASE("SL2 lifts and cusp equivalence") {
  for (std::uint64_t N : {11u, 36u, 91u})
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(N); ++c)
      for (std::int64_t d = 0; d < static_cast<std::int64_t>(N); ++d) {
        if (std::gcd(std::gcd<std::int64_t>(c, d), static_cast<std::int64_t>(N)) != 1) continue;
        const auto [a, b, c0, d0] = lift_to_sl2z(c, d, N);
        CHECK(a * d0 - b * c0 == 1);
        CHECK(((c0 - c) % static_cast<std::int64_t>(N)) == 0);
        CHECK(((d0 - d) % static_cast<std::int64_t>(N)) == 0);
      }
  CHECK_FALSE(cusps_equivalent(0, 1, 1, 0, 11));
  CHECK(cusps_equivalent(1, 2, 1, 3, 1));
  CHECK(cusps_equivalent(1, 5, 2, 5, 25) == cusps_equivalent(2, 5, 1, 5, 25));
  for (std::uint64_t N : {11u, 36u, 64u, 100u, 6391u}) CHECK(ManinPresentation(N).cusp_count == plus_cusp_count(N));
}

TEST_CASE("cuspidal dimension equals the genus for N <= 200") {
  for (std::uint64_t N = 1; N <= 200; ++N) {
    const ManinPresentation pres(N);
    const CuspidalSpace<PF> S(pres, kField);
    CAPTURE(N);
    CHECK(S.dimension() == genus_x0(N));
  }
}

TEST_CASE("eta products") {
  CHECK(eta_product_qexp({}, 3) == std::vector<Int>{1, 0, 0, 0});
  CHECK(eta_product_qexp({{1, 2}, {11, 2}}, 6) == std::vector<Int>{0, 1, -2, -1, 2, 1, 2});
  const auto delta = eta_product_qexp({{1, 24}}, 3);
  CHECK(delta[1] == 1);
  CHECK(delta[2] == -24);
  CHECK(delta[3] == 252);
  CHECK_THROWS(eta_product_qexp({{1, 1}}, 4));
}

TEST_CASE("Hecke eigenvalues match eta products at levels 11, 14, 15") {
  const std::map<std::uint64_t, std::vector<std::pair<unsigned, int>>> eta{
      {11, {{1, 2}, {11, 2}}}, {14, {{1, 1}, {2, 1}, {7, 1}, {14, 1}}}, {15, {{1, 1}, {3, 1}, {5, 1}, {15, 1}}}};
  for (const auto& [N, factors] : eta) {
    const auto q = eta_product_qexp(factors, 13);
    const ManinPresentation pres(N);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      if (N % p == 0) continue;
      CAPTURE(N);
      CAPTURE(p);
      const auto H = hecke_charpoly(pres, p);
      CHECK(H.charpoly == IntPoly({Int(-q[p]), Int(1)}));
    }
  }
  CHECK(hecke_charpoly(11, 2).charpoly == ip({2, 1}));
  CHECK(hecke_charpoly(11, 3).charpoly == ip({1, 1}));
  CHECK_THROWS(hecke_charpoly(11, 11));
}

TEST_CASE("known characteristic polynomials") {
  CHECK(hecke_charpoly(23, 2).charpoly == ip({-1, 1, 1}));
  CHECK(hecke_charpoly(37, 2).charpoly == ip({0, 2, 1}));
  CHECK(hecke_charpoly(64, 3).charpoly == ip({0, 0, 0, 1}));
}

TEST_CASE("multimodular agrees with exact arithmetic") {
  for (std::uint64_t N : {23u, 37u, 64u, 67u, 100u, 113u, 143u}) {
    REQUIRE(genus_x0(N) <= 13);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      if (N % p == 0) continue;
      CAPTURE(N);
      CAPTURE(p);
      const auto par = hecke_charpoly(N, p);
      CHECK(par == hecke_charpoly_exact(N, p));
      CHECK(par == hecke_charpoly(N, p, {.parallel = false}));
    }
  }
}

TEST_CASE("Hecke operators commute") {
  for (std::uint64_t N : {37u, 64u, 100u, 143u, 389u}) {
    const ManinPresentation pres(N);
    const CuspidalSpace<PF> S(pres, kField);
    std::vector<DenseMatrix<PF>> T;
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p : {2u, 3u, 5u, 7u})
      if (N % p != 0) {
        T.push_back(S.hecke_matrix(p));
        ps.push_back(p);
      }
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = i + 1; j < T.size(); ++j) {
        CAPTURE(N);
        CAPTURE(ps[i]);
        CAPTURE(ps[j]);
        CHECK(mul(kField, T[i], T[j]).a == mul(kField, T[j], T[i]).a);
      }
  }
}

TEST_CASE("Hessenberg characteristic polynomial against determinants") {
  std::mt19937_64 rng(5);
  const PF F(1000003u);
  for (std::size_t n : {1u, 2u, 5u, 12u, 31u}) {
    DenseMatrix<PF> A(n, n, 0);
    for (auto& x : A.a) x = static_cast<std::uint32_t>(rng() % F.p);
    if (n == 31)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 3 < i; ++j) A(i, j) = 0;  // already nearly Hessenberg
    const auto cp = charpoly_hessenberg(F, A);
    REQUIRE(cp.size() == n + 1);
    CHECK(cp[n] == 1);
    for (std::uint32_t t : {0u, 1u, 7u, 999999u}) {
      std::uint32_t v = 0;
      for (std::size_t i = cp.size(); i-- > 0;) v = F.add(F.mul(v, t), cp[i]);
      CHECK(v == det_shifted(F, A, t));
    }
  }
}

TEST_CASE("Hecke file format") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::vector<HeckeCharPoly> ops{hecke_charpoly(37, 2), hecke_charpoly(37, 3)};
  const auto path = (dir / "qcert_hecke_37.json").string();
  store_hecke_charpolys(path, ops);
  CHECK(load_hecke_charpolys(path) == ops);
  CHECK(hecke_json(parse_hecke_json(hecke_json(ops))) == hecke_json(ops));
  std::filesystem::remove(path);

  // wrong degree, not monic, bad weight, malformed
  CHECK_THROWS(parse_hecke_json(R"({"level": 37, "weight": 2, "operators": [{"p": 2, "charpoly": ["1", "1"]}]})"));
  CHECK_THROWS(parse_hecke_json(R"({"level": 37, "weight": 2, "operators": [{"p": 2, "charpoly": ["0", "2", "2"]}]})"));
  CHECK_THROWS(parse_hecke_json(R"({"level": 37, "weight": 4, "operators": [{"p": 2, "charpoly": ["0", "2", "1"]}]})"));
  CHECK_THROWS(parse_hecke_json(R"({"level": 37, "operators": [)"));
  CHECK_THROWS(parse_hecke_json(R"({"level": 37, "weight": 2, "operators": [{"p": 2, "charpoly": ["x", "2", "1"]}]})"));

  const auto bundled = load_hecke_charpolys(data_path("hecke_6391.json"));
  REQUIRE(bundled.size() == 3);
  for (const auto& H : bundled) {
    CHECK(H.level == 6391);
    CHECK(H.charpoly.degree() == 669);
  }
}
