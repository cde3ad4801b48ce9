#pragma once

// Weight-2 modular symbols for Gamma_0(N), plus quotient, via Manin symbols.
//
// The combinatorial presentation (P^1(Z/N), 2-term orbits, 3-term rows,
// boundary cusps) is field independent and built once; linear algebra runs
// over a field F: PrimeField for multimodular work, RationalField for an
// exact check at small dimension.

#include "qcert/hecke_data.hpp"
#include "qcert/integer.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace qcert {

/// P^1(Z/N Z) with a canonical index per point.
class P1List {
 public:
  explicit P1List(std::uint64_t N);
  std::uint64_t level() const { return N_; }
  std::size_t size() const { return reps_.size(); }
  /// Requires gcd(c, d, N) = 1.
  std::size_t index(std::int64_t c, std::int64_t d) const;
  std::pair<std::int64_t, std::int64_t> rep(std::size_t i) const { return reps_[i]; }

 private:
  struct Local {
    std::int64_t p, q;  // prime, prime power
  };
  std::uint64_t N_;
  std::vector<Local> locals_;
  std::vector<std::size_t> strides_;
  std::vector<std::pair<std::int64_t, std::int64_t>> reps_;
};

/// Integer matrices [a b; c d] with ad - bc = n, a > b >= 0, d > c >= 0.
std::vector<std::array<std::int64_t, 4>> merel_matrices(std::uint64_t n);

/// Lift (c, d) mod N to [a b; c' d'] in SL_2(Z) with (c', d') = (c, d) mod N.
std::array<std::int64_t, 4> lift_to_sl2z(std::int64_t c, std::int64_t d, std::uint64_t N);

/// Cusps p1/q1, p2/q2 (reduced) equivalent under Gamma_0(N).
bool cusps_equivalent(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2, std::uint64_t N);

struct ManinPresentation {
  std::uint64_t N = 0;
  P1List p1;
  // Generator i equals sign[i] * (free generator cls[i]); cls = -1 means 0.
  std::vector<int> cls;
  std::vector<int> sign;
  std::vector<std::size_t> free_gens;                 // P1 index of each free generator
  std::vector<std::vector<std::pair<int, int>>> rows;  // 3-term relations over free generators
  std::vector<std::pair<int, int>> boundary;           // cusp classes of [a/c] and [b/d]
  std::size_t cusp_count = 0;

  explicit ManinPresentation(std::uint64_t level);
  std::size_t free_count() const { return free_gens.size(); }
};

struct PrimeField {
  using T = std::uint32_t;
  std::uint32_t p;
  std::uint64_t barrett;  // floor(2^64 / p)
  explicit PrimeField(std::uint32_t prime)
      : p(prime), barrett(static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / prime)) {}
  T zero() const { return 0; }
  T one() const { return 1; }
  T from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<T>(r < 0 ? r + p : r);
  }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<T>(s >= p ? s - p : s);
  }
  T sub(T a, T b) const { return a >= b ? a - b : static_cast<T>(std::uint64_t(a) + p - b); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T mul(T a, T b) const {
    const std::uint64_t x = std::uint64_t(a) * b;
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett) >> 64);
    std::uint64_t r = x - q * p;
    return static_cast<T>(r >= p ? r - p : r);
  }
  T inv(T a) const;
};

struct RationalField {
  using T = Rat;
  T zero() const { return Rat(0); }
  T one() const { return Rat(1); }
  T from_int(std::int64_t v) const { return Rat(static_cast<long>(v)); }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
};

template <class F>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<typename F::T> a;
  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, typename F::T z) : rows(r), cols(c), a(r * c, z) {}
  typename F::T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const typename F::T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// det(xI - A), low degree first, via reduction to Hessenberg form.
template <class F>
std::vector<typename F::T> charpoly_hessenberg(const F& field, DenseMatrix<F> A);

/// Cuspidal plus-quotient space over F with Hecke operators T_p, p not dividing N.
template <class F>
class CuspidalSpace {
 public:
  CuspidalSpace(const ManinPresentation& pres, F field);
  std::size_t ambient_dimension() const { return basis_.size(); }
  std::size_t dimension() const { return kernel_free_.size(); }
  /// Matrix of T_p on the cuspidal subspace in its echelon basis.
  DenseMatrix<F> hecke_matrix(std::uint64_t p) const;
  const F& field() const { return field_; }

 private:
  using T = typename F::T;
  using Sparse = std::vector<std::pair<int, T>>;

  void add_scaled(std::vector<T>& acc, const Sparse& v, T s) const;

  const ManinPresentation& pres_;
  F field_;
  std::vector<Sparse> expr_;       // free generator -> combination of basis elements
  std::vector<int> basis_;         // basis element -> free generator
  std::vector<std::size_t> kernel_free_;  // ambient coordinates where the kernel basis is the identity
  std::vector<std::pair<std::size_t, std::vector<T>>> kernel_pivots_;  // (ambient coordinate, value on each kernel vector)
};

extern template class CuspidalSpace<PrimeField>;
extern template class CuspidalSpace<RationalField>;

struct HeckeOptions {
  bool parallel = true;
  unsigned extra_primes = 2;  // beyond the coefficient bound, used as a consistency check
};

/// Integer characteristic polynomial of T_p on S_2(Gamma_0(N)) by CRT over
/// 31-bit primes. The coefficient bound (1 + ceil(2 sqrt p))^g relies on the
/// Ramanujan bound for eigenvalues.
HeckeCharPoly hecke_charpoly(const ManinPresentation& pres, std::uint64_t p, const HeckeOptions& opts = {});
HeckeCharPoly hecke_charpoly(std::uint64_t N, std::uint64_t p, const HeckeOptions& opts = {});

/// Same over Q directly; meant for small genus.
HeckeCharPoly hecke_charpoly_exact(std::uint64_t N, std::uint64_t p);

/// Coefficients of q^0 .. q^precision in prod eta(m tau)^r. The leading
/// exponent sum m r / 24 must be a nonnegative integer.
std::vector<Int> eta_product_qexp(const std::vector<std::pair<unsigned, int>>& factors, std::size_t precision);

}  // namespace qcert
