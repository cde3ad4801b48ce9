#include "qcert/modsym.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace qcert {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Returns (g, x, y) with x a + y b = g = gcd(a, b) >= 0.
std::array<std::int64_t, 3> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  auto [g, x, y] = ext_gcd(mod(a, m), m);
  (void)y;
  if (g != 1) throw std::domain_error("not invertible");
  return mod(x, m);
}

}  // namespace

// ---------------------------------------------------------------------------
// P^1(Z/N)

P1List::P1List(std::uint64_t N) : N_(N) {
  if (N == 0) throw std::invalid_argument("level must be positive");
  std::uint64_t m = N;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    std::int64_t q = 1;
    while (m % p == 0) {
      m /= p;
      q *= static_cast<std::int64_t>(p);
    }
    locals_.push_back({static_cast<std::int64_t>(p), q});
  }
  if (m > 1) locals_.push_back({static_cast<std::int64_t>(m), static_cast<std::int64_t>(m)});

  std::size_t total = 1;
  for (const auto& L : locals_) {
    strides_.push_back(total);
    total *= static_cast<std::size_t>(L.q + L.q / L.p);
  }
  reps_.resize(total);
  const auto NN = static_cast<std::int64_t>(N);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::int64_t c = 0, d = 0;
    std::size_t rest = idx;
    for (const auto& L : locals_) {
      const auto size = static_cast<std::size_t>(L.q + L.q / L.p);
      const auto k = static_cast<std::int64_t>(rest % size);
      rest /= size;
      const std::int64_t ci = k < L.q ? k : 1;
      const std::int64_t di = k < L.q ? 1 : L.p * (k - L.q);
      // CRT: add the component times the idempotent for q.
      const std::int64_t M = NN / L.q;
      const std::int64_t e = static_cast<std::int64_t>((static_cast<__int128>(M) * inv_mod(M, L.q)) % NN);
      c = static_cast<std::int64_t>((c + static_cast<__int128>(ci) * e) % NN);
      d = static_cast<std::int64_t>((d + static_cast<__int128>(di) * e) % NN);
    }
    reps_[idx] = {c, d};
  }
  if (locals_.empty()) reps_[0] = {0, 1};
}

std::size_t P1List::index(std::int64_t c, std::int64_t d) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < locals_.size(); ++i) {
    const auto& L = locals_[i];
    const std::int64_t cc = mod(c, L.q), dd = mod(d, L.q);
    std::int64_t k;
    if (dd % L.p != 0) {
      k = static_cast<std::int64_t>(static_cast<__int128>(cc) * inv_mod(dd, L.q) % L.q);
    } else {
      if (cc % L.p == 0) throw std::invalid_argument("(c : d) is not a point of P^1(Z/N)");
      const auto y = static_cast<std::int64_t>(static_cast<__int128>(dd) * inv_mod(cc, L.q) % L.q);
      k = L.q + y / L.p;
    }
    idx += static_cast<std::size_t>(k) * strides_[i];
  }
  return idx;
}

std::vector<std::array<std::int64_t, 4>> merel_matrices(std::uint64_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  std::vector<std::array<std::int64_t, 4>> out;
  // ad - bc = n with 0 <= b < a, 0 <= c < d forces a + d <= n + 1.
  for (std::int64_t a = 1; a <= nn; ++a) {
    for (std::int64_t d = 1; a + d <= nn + 1; ++d) {
      const std::int64_t bc = a * d - nn;
      if (bc < 0) continue;
      if (bc == 0) {
        for (std::int64_t c = 0; c < d; ++c) out.push_back({a, 0, c, d});
        for (std::int64_t b = 1; b < a; ++b) out.push_back({a, b, 0, d});
        continue;
      }
      for (std::int64_t b = 1; b < a; ++b) {
        if (bc % b == 0 && bc / b < d) out.push_back({a, b, bc / b, d});
      }
    }
  }
  return out;
}

std::array<std::int64_t, 4> lift_to_sl2z(std::int64_t c, std::int64_t d, std::uint64_t N) {
  if (N == 1) return {1, 0, 0, 1};
  const auto NN = static_cast<std::int64_t>(N);
  std::int64_t c0 = mod(c, NN), d0 = mod(d, NN);
  if (c0 == 0) c0 = NN;
  while (std::gcd(c0, d0) != 1) d0 += NN;
  auto [g, x, y] = ext_gcd(d0, c0);  // x d0 + y c0 = 1
  (void)g;
  return {x, -y, c0, d0};
}

bool cusps_equivalent(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2, std::uint64_t N) {
  auto s_of = [](std::int64_t p, std::int64_t q) -> std::int64_t {
    q = q < 0 ? -q : q;
    if (q == 0) return p;
    if (q == 1) return 0;
    return inv_mod(p, q);
  };
  const std::int64_t s1 = s_of(p1, q1), s2 = s_of(p2, q2);
  const auto g = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(q1 < 0 ? -q1 : q1) *
                                                        static_cast<std::uint64_t>(q2 < 0 ? -q2 : q2),
                                                    N));
  const __int128 diff = static_cast<__int128>(s1) * q2 - static_cast<__int128>(s2) * q1;
  return diff % g == 0;
}

// ---------------------------------------------------------------------------
// Presentation

ManinPresentation::ManinPresentation(std::uint64_t level) : N(level), p1(level) {
  const std::size_t n = p1.size();
  auto act = [&](std::size_t i, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    auto [x, y] = p1.rep(i);
    return p1.index(x * a + y * c, x * b + y * d);
  };
  auto S = [&](std::size_t i) { return act(i, 0, -1, 1, 0); };     // (c,d) -> (d,-c)
  auto eta = [&](std::size_t i) { return act(i, -1, 0, 0, 1); };   // (c,d) -> (-c,d)
  auto tau = [&](std::size_t i) { return act(i, 0, -1, 1, -1); };  // (c,d) -> (d,-c-d)

  // 2-term relations x = -xS and x = x eta: orbits with signs relative to a root.
  cls.assign(n, -2);
  sign.assign(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (cls[root] != -2) continue;
    std::vector<std::size_t> orbit{root};
    std::map<std::size_t, int> seen{{root, 1}};
    bool zero = false;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const std::size_t i = orbit[k];
      const int ph = seen[i];
      for (auto [j, s] : {std::pair{S(i), -ph}, std::pair{eta(i), ph}}) {
        auto it = seen.find(j);
        if (it == seen.end()) {
          seen.emplace(j, s);
          orbit.push_back(j);
        } else if (it->second != s) {
          zero = true;
        }
      }
    }
    const int id = zero ? -1 : static_cast<int>(free_gens.size());
    if (!zero) free_gens.push_back(root);
    for (auto [i, s] : seen) {
      cls[i] = id;
      sign[i] = zero ? 0 : s;
    }
  }

  // 3-term relations x + x tau + x tau^2 = 0.
  std::set<std::vector<std::pair<int, int>>> distinct;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<int, int> acc;
    std::size_t j = i;
    for (int k = 0; k < 3; ++k, j = tau(j)) {
      if (cls[j] >= 0) acc[cls[j]] += sign[j];
    }
    std::vector<std::pair<int, int>> row;
    for (auto [col, v] : acc) {
      if (v != 0) row.emplace_back(col, v);
    }
    if (row.empty()) continue;
    if (row.front().second < 0) {
      for (auto& e : row) e.second = -e.second;
    }
    distinct.insert(std::move(row));
  }
  rows.assign(distinct.begin(), distinct.end());

  // Boundary [a/c] - [b/d] in the plus quotient of the cusp space.
  std::vector<std::pair<std::int64_t, std::int64_t>> cusp_reps;
  auto cusp_class = [&](std::int64_t num, std::int64_t den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (den == 0) num = 1;
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    for (std::size_t k = 0; k < cusp_reps.size(); ++k) {
      auto [p2, q2] = cusp_reps[k];
      if (cusps_equivalent(num, den, p2, q2, N) || cusps_equivalent(-num, den, p2, q2, N)) return static_cast<int>(k);
    }
    cusp_reps.emplace_back(num, den);
    return static_cast<int>(cusp_reps.size() - 1);
  };
  for (std::size_t g : free_gens) {
    auto [c, d] = p1.rep(g);
    const auto m = lift_to_sl2z(c, d, N);
    boundary.emplace_back(cusp_class(m[0], m[2]), cusp_class(m[1], m[3]));
  }
  cusp_count = cusp_reps.size();
}

// ---------------------------------------------------------------------------
// Linear algebra over F

PrimeField::T PrimeField::inv(T a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return static_cast<T>(inv_mod(a, p));
}

template <class F>
std::vector<typename F::T> charpoly_hessenberg(const F& K, DenseMatrix<F> H) {
  using T = typename F::T;
  const std::size_t n = H.rows;
  if (H.cols != n) throw std::invalid_argument("charpoly of a non-square matrix");
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && K.is_zero(H(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(i, j), H(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(H(j, i), H(j, m));
    }
    // Similarity by I + u e_m^T: all row operations use the original row m,
    // then one pass adds the combination of columns to column m.
    const T tinv = K.inv(H(m, m - 1));
    std::vector<T> u(n, K.zero());
    for (std::size_t r = m + 1; r < n; ++r) u[r] = K.mul(H(r, m - 1), tinv);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (K.is_zero(u[r])) continue;
      for (std::size_t j = m - 1; j < n; ++j) H(r, j) = K.sub(H(r, j), K.mul(u[r], H(m, j)));
    }
    for (std::size_t j = 0; j < n; ++j) {
      T s = H(j, m);
      for (std::size_t r = m + 1; r < n; ++r) s = K.add(s, K.mul(u[r], H(j, r)));
      H(j, m) = s;
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (h_{k,k-1} ... h_{k-i+1,k-i}) p_{k-i-1}
  std::vector<std::vector<T>> P(n + 1);
  P[0] = {K.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<T> cur(k + 1, K.zero());
    for (std::size_t j = 0; j < k; ++j) {
      cur[j + 1] = K.add(cur[j + 1], P[k - 1][j]);
      cur[j] = K.sub(cur[j], K.mul(H(k - 1, k - 1), P[k - 1][j]));
    }
    T t = K.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = K.mul(t, H(k - i, k - i - 1));
      if (K.is_zero(t)) break;
      const T s = K.mul(H(k - i - 1, k - 1), t);
      if (K.is_zero(s)) continue;
      for (std::size_t j = 0; j < P[k - i - 1].size(); ++j) cur[j] = K.sub(cur[j], K.mul(s, P[k - i - 1][j]));
    }
    P[k] = std::move(cur);
  }
  return P[n];
}

template <class F>
void CuspidalSpace<F>::add_scaled(std::vector<T>& acc, const Sparse& v, T s) const {
  for (const auto& [i, x] : v) acc[static_cast<std::size_t>(i)] = field_.add(acc[static_cast<std::size_t>(i)], field_.mul(s, x));
}

template <class F>
CuspidalSpace<F>::CuspidalSpace(const ManinPresentation& pres, F field) : pres_(pres), field_(std::move(field)) {
  const F& K = field_;
  const std::size_t nf = pres.free_count();

  // Echelon form of the 3-term rows. A new row is reduced by the existing
  // pivots in creation order; pivot rows never contain earlier pivot columns.
  std::vector<Sparse> prow;
  std::vector<int> pcol;
  std::vector<int> col_pivot(nf, -1);
  std::vector<T> acc(nf, K.zero());
  std::vector<char> touched(nf, 0), queued(nf, 0);
  std::vector<int> touched_list;
  for (const auto& row : pres.rows) {
    touched_list.clear();
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;  // pivot creation order
    auto touch = [&](int c) {
      if (!touched[c]) {
        touched[c] = 1;
        touched_list.push_back(c);
      }
      if (col_pivot[c] >= 0 && !queued[c]) {
        queued[c] = 1;
        heap.push(col_pivot[c]);
      }
    };
    for (auto [c, v] : row) {
      acc[c] = K.add(acc[c], K.from_int(v));
      touch(c);
    }
    while (!heap.empty()) {
      const int k = heap.top();
      heap.pop();
      const int c = pcol[k];
      queued[c] = 0;
      const T coef = acc[c];
      if (K.is_zero(coef)) continue;
      for (const auto& [j, x] : prow[k]) {
        acc[j] = K.sub(acc[j], K.mul(coef, x));
        touch(j);
      }
    }
    Sparse out;
    for (int c : touched_list) {
      if (!K.is_zero(acc[c])) out.emplace_back(c, acc[c]);
      acc[c] = K.zero();
      touched[c] = 0;
    }
    if (out.empty()) continue;
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const int piv = out.back().first;
    const T s = K.inv(out.back().second);
    for (auto& e : out) e.second = K.mul(e.second, s);
    col_pivot[piv] = static_cast<int>(prow.size());
    pcol.push_back(piv);
    prow.push_back(std::move(out));
  }

  expr_.assign(nf, {});
  for (std::size_t c = 0; c < nf; ++c) {
    if (col_pivot[c] >= 0) continue;
    expr_[c] = {{static_cast<int>(basis_.size()), K.one()}};
    basis_.push_back(static_cast<int>(c));
  }
  const std::size_t D = basis_.size();
  std::vector<T> dacc(D, K.zero());
  for (std::size_t k = prow.size(); k-- > 0;) {
    std::fill(dacc.begin(), dacc.end(), K.zero());
    for (const auto& [c, x] : prow[k]) {
      if (c == pcol[k]) continue;
      add_scaled(dacc, expr_[static_cast<std::size_t>(c)], K.neg(x));
    }
    Sparse e;
    for (std::size_t i = 0; i < D; ++i) {
      if (!K.is_zero(dacc[i])) e.emplace_back(static_cast<int>(i), dacc[i]);
    }
    expr_[static_cast<std::size_t>(pcol[k])] = std::move(e);
  }

  // Boundary matrix (cusp classes x D), reduced row echelon form.
  const std::size_t nc = pres.cusp_count;
  DenseMatrix<F> B(nc, D, K.zero());
  for (std::size_t b = 0; b < D; ++b) {
    auto [k1, k2] = pres.boundary[static_cast<std::size_t>(basis_[b])];
    B(static_cast<std::size_t>(k1), b) = K.add(B(static_cast<std::size_t>(k1), b), K.one());
    B(static_cast<std::size_t>(k2), b) = K.sub(B(static_cast<std::size_t>(k2), b), K.one());
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < D && r < nc; ++c) {
    std::size_t i = r;
    while (i < nc && K.is_zero(B(i, c))) ++i;
    if (i == nc) continue;
    for (std::size_t j = 0; j < D; ++j) std::swap(B(i, j), B(r, j));
    const T s = K.inv(B(r, c));
    for (std::size_t j = 0; j < D; ++j) B(r, j) = K.mul(B(r, j), s);
    for (std::size_t i2 = 0; i2 < nc; ++i2) {
      if (i2 == r || K.is_zero(B(i2, c))) continue;
      const T u = B(i2, c);
      for (std::size_t j = 0; j < D; ++j) B(i2, j) = K.sub(B(i2, j), K.mul(u, B(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(D, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  for (std::size_t c = 0; c < D; ++c) {
    if (!is_pivot[c]) kernel_free_.push_back(c);
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<T> vals;
    vals.reserve(kernel_free_.size());
    for (std::size_t f : kernel_free_) vals.push_back(K.neg(B(i, f)));
    kernel_pivots_.emplace_back(pivots[i], std::move(vals));
  }
}

template <class F>
DenseMatrix<F> CuspidalSpace<F>::hecke_matrix(std::uint64_t p) const {
  const F& K = field_;
  if (pres_.N % p == 0) throw std::invalid_argument("T_p needs p coprime to the level");
  const auto X = merel_matrices(p);
  const std::size_t D = basis_.size();

  // T applied to one ambient basis element, densely.
  auto apply = [&](std::size_t b) {
    std::vector<T> out(D, K.zero());
    auto [c, d] = pres_.p1.rep(pres_.free_gens[static_cast<std::size_t>(basis_[b])]);
    for (const auto& m : X) {
      const std::size_t g = pres_.p1.index(c * m[0] + d * m[2], c * m[1] + d * m[3]);
      const int cl = pres_.cls[g];
      if (cl < 0) continue;
      add_scaled(out, expr_[static_cast<std::size_t>(cl)], K.from_int(pres_.sign[g]));
    }
    return out;
  };

  const std::size_t g = kernel_free_.size();
  std::vector<std::size_t> row_of(D, SIZE_MAX);
  for (std::size_t i = 0; i < g; ++i) row_of[kernel_free_[i]] = i;

  DenseMatrix<F> A(g, g, K.zero());
  auto accumulate = [&](const std::vector<T>& img, std::size_t k, T s) {
    for (std::size_t i = 0; i < g; ++i) A(i, k) = K.add(A(i, k), K.mul(s, img[kernel_free_[i]]));
  };
  for (std::size_t k = 0; k < g; ++k) accumulate(apply(kernel_free_[k]), k, K.one());
  for (const auto& [col, vals] : kernel_pivots_) {
    const auto img = apply(col);
    for (std::size_t k = 0; k < g; ++k) {
      if (!K.is_zero(vals[k])) accumulate(img, k, vals[k]);
    }
  }
  return A;
}

template class CuspidalSpace<PrimeField>;
template class CuspidalSpace<RationalField>;
template std::vector<PrimeField::T> charpoly_hessenberg<PrimeField>(const PrimeField&, DenseMatrix<PrimeField>);
template std::vector<RationalField::T> charpoly_hessenberg<RationalField>(const RationalField&,
                                                                          DenseMatrix<RationalField>);

// ---------------------------------------------------------------------------
// Characteristic polynomials

namespace {

std::optional<std::vector<std::uint32_t>> charpoly_mod(const ManinPresentation& pres, std::uint64_t p,
                                                       std::uint32_t ell, std::size_t genus) {
  CuspidalSpace<PrimeField> S(pres, PrimeField(ell));
  if (S.dimension() != genus) return std::nullopt;
  return charpoly_hessenberg(S.field(), S.hecke_matrix(p));
}

}  // namespace

HeckeCharPoly hecke_charpoly(const ManinPresentation& pres, std::uint64_t p, const HeckeOptions& opts) {
  const std::uint64_t N = pres.N;
  if (!is_prime(p) || N % p == 0) throw std::invalid_argument("T_p needs a prime p coprime to the level");
  const std::size_t g = genus_x0(N);
  HeckeCharPoly out{N, p, IntPoly::constant(Int(1))};
  if (g == 0) return out;

  std::uint64_t s = 0;
  while ((s + 1) * (s + 1) <= 4 * p) ++s;
  if (s * s < 4 * p) ++s;
  const Int bound = 2 * int_pow(Int(1 + s), g);  // |coefficient| < bound / 2

  std::vector<Int> coeffs(g + 1, Int(0));
  Int M(1);
  std::uint32_t next = 2147483647U;
  unsigned extra_done = 0;
  std::vector<std::uint32_t> batch;
  while (extra_done < opts.extra_primes || M <= bound) {
    // Size the batch from the remaining bit deficit.
    const std::size_t deficit =
        M <= bound ? (mpz_sizeinbase(Int(bound / M + 1).get_mpz_t(), 2) + 29) / 30 + 1 : 0;
    const std::size_t want = std::max<std::size_t>(deficit + opts.extra_primes - extra_done, 1);
    batch.clear();
    while (batch.size() < want) {
      while (!is_prime(static_cast<std::uint64_t>(next))) next -= 2;
      batch.push_back(next);
      next -= 2;
    }
    std::vector<std::optional<std::vector<std::uint32_t>>> res(batch.size());
    std::vector<std::string> errors(batch.size());
    const auto nb = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (long i = 0; i < nb; ++i) {
      try {
        res[static_cast<std::size_t>(i)] = charpoly_mod(pres, p, batch[static_cast<std::size_t>(i)], g);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(i)] = e.what();
      }
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!errors[i].empty()) throw std::runtime_error("charpoly mod " + std::to_string(batch[i]) + ": " + errors[i]);
      if (!res[i]) continue;  // cuspidal dimension drops mod this prime
      const std::uint32_t ell = batch[i];
      const auto& r = *res[i];
      if (M > bound) {
        // Consistency check against an extra prime.
        for (std::size_t j = 0; j <= g; ++j) {
          if (mod_u64(coeffs[j], ell) != r[j]) {
            throw std::runtime_error("multimodular reconstruction of T_" + std::to_string(p) +
                                     " disagrees mod " + std::to_string(ell));
          }
        }
        ++extra_done;
        continue;
      }
      const Int Minv(static_cast<unsigned long>(inv_mod(mod_u64(M, ell), ell)));
      for (std::size_t j = 0; j <= g; ++j) {
        const Int diff = Int(static_cast<unsigned long>(r[j])) - coeffs[j];
        Int t = diff * Minv;
        t %= Int(static_cast<unsigned long>(ell));
        if (t < 0) t += ell;
        coeffs[j] += M * t;
      }
      M *= ell;
      if (M > bound) {
        for (auto& c : coeffs) {
          if (2 * c > M) c -= M;
        }
      }
    }
  }
  out.charpoly = IntPoly(coeffs);
  if (out.charpoly.degree() != static_cast<int>(g) || out.charpoly.lead() != 1) {
    throw std::runtime_error("reconstructed Hecke polynomial is not monic of degree g");
  }
  return out;
}

HeckeCharPoly hecke_charpoly(std::uint64_t N, std::uint64_t p, const HeckeOptions& opts) {
  const ManinPresentation pres(N);
  return hecke_charpoly(pres, p, opts);
}

HeckeCharPoly hecke_charpoly_exact(std::uint64_t N, std::uint64_t p) {
  if (!is_prime(p) || N % p == 0) throw std::invalid_argument("T_p needs a prime p coprime to the level");
  const ManinPresentation pres(N);
  const std::size_t g = genus_x0(N);
  CuspidalSpace<RationalField> S(pres, RationalField{});
  if (S.dimension() != g) throw std::logic_error("cuspidal dimension differs from the genus");
  const auto cp = charpoly_hessenberg(S.field(), S.hecke_matrix(p));
  std::vector<Int> c;
  for (const Rat& x : cp) {
    if (x.get_den() != 1) throw std::logic_error("non-integral Hecke characteristic polynomial");
    c.push_back(x.get_num());
  }
  return {N, p, IntPoly(std::move(c))};
}

std::vector<Int> eta_product_qexp(const std::vector<std::pair<unsigned, int>>& factors, std::size_t precision) {
  long shift = 0;
  for (auto [m, r] : factors) {
    if (m == 0) throw std::invalid_argument("eta(0 tau) is undefined");
    shift += static_cast<long>(m) * r;
  }
  if (shift < 0 || shift % 24 != 0) throw std::invalid_argument("eta quotient has non-integral leading exponent");
  const auto lead = static_cast<std::size_t>(shift / 24);
  std::vector<Int> out(precision + 1, Int(0));
  if (lead > precision) return out;
  const std::size_t L = precision - lead;
  std::vector<Int> s(L + 1, Int(0));
  s[0] = 1;
  for (auto [m, r] : factors) {
    for (std::size_t k = m; k <= L; k += m) {
      for (int t = 0; t < std::abs(r); ++t) {
        if (r > 0) {
          for (std::size_t i = L; i >= k; --i) s[i] -= s[i - k];  // times (1 - q^k)
        } else {
          for (std::size_t i = k; i <= L; ++i) s[i] += s[i - k];  // divided by (1 - q^k)
        }
      }
    }
  }
  for (std::size_t i = 0; i <= L; ++i) out[lead + i] = s[i];
  return out;
}

}  // namespace qcert
