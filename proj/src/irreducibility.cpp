#include "qcert/irreducibility.hpp"
#include "qcert/resultant.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qcert {

namespace {

void partitions(unsigned remaining, unsigned min_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  for (unsigned d = min_part; d <= remaining; ++d) {
    cur.push_back(d);
    partitions(remaining - d, d, cur, out);
    cur.pop_back();
  }
}

// Sorts (d_i, e_i) pairs so that relabelings of equal dimensions coincide.
CaseProfile canonical(const std::vector<unsigned>& dims, const std::vector<unsigned>& exps) {
  std::vector<std::pair<unsigned, unsigned>> de;
  for (std::size_t i = 0; i < dims.size(); ++i) de.emplace_back(dims[i], exps[i]);
  std::sort(de.begin(), de.end());
  CaseProfile c;
  for (auto [d, e] : de) {
    c.dims.push_back(d);
    c.exps.push_back(e);
  }
  return c;
}

// ∩ over p of (odd support of value_p) ∪ {p}, skipping zero values.
std::set<Int> intersect_supports(const std::vector<std::pair<std::uint64_t, Int>>& values) {
  std::optional<std::set<Int>> acc;
  for (const auto& [p, v] : values) {
    if (v == 0) continue;
    std::set<Int> s = odd_prime_support(v);
    if (p % 2 == 1) s.insert(Int(p));
    if (!acc) {
      acc = std::move(s);
    } else {
      std::set<Int> next;
      std::set_intersection(acc->begin(), acc->end(), s.begin(), s.end(), std::inserter(next, next.end()));
      acc = std::move(next);
    }
  }
  if (!acc) throw std::invalid_argument("every input gives the zero constraint");
  return *acc;
}

const std::set<Int> kSmallPrimes{Int(3), Int(5), Int(7)};

}  // namespace

std::vector<CaseProfile> enumerate_case_profiles() {
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur;
  partitions(6, 1, cur, parts);
  std::set<CaseProfile> found;
  for (const auto& dims : parts) {
    std::vector<unsigned> exps(dims.size(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned sum) {
      if (i == dims.size()) {
        if (sum != 3) return;
        std::vector<unsigned> lhs = exps, rhs;
        for (std::size_t k = 0; k < dims.size(); ++k) rhs.push_back(dims[k] - exps[k]);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs == rhs) found.insert(canonical(dims, exps));
        return;
      }
      for (unsigned e = 0; e <= dims[i] && sum + e <= 3; ++e) {
        exps[i] = e;
        rec(i + 1, sum + e);
      }
    };
    rec(0, 0);
  }
  return {found.begin(), found.end()};
}

CaseFamily case_family(const CaseProfile& c) {
  switch (c.dims.front()) {
    case 1:
      return CaseFamily::Dim1;
    case 2:
      for (std::size_t i = 0; i < c.dims.size(); ++i) {
        if (c.dims[i] == 2 && c.exps[i] == 1) return CaseFamily::Dim2;
      }
      throw std::logic_error("profile without a 2-dimensional constituent of determinant exponent 1");
    case 3:
      return CaseFamily::Dim3;
    default:
      throw std::logic_error("profile with a single constituent");
  }
}

unsigned dim3_branch(const CaseProfile& c) {
  if (c.dims != std::vector<unsigned>{3, 3}) throw std::invalid_argument("not a (3,3) profile");
  const unsigned e = std::min(c.exps[0], c.exps[1]);
  if (e > 1) throw std::logic_error("no constituent with exponent at most 1");
  return e;
}

std::optional<std::uint64_t> witness_search(const std::vector<LPolynomial>& lpolys, std::uint64_t ell,
                                            const std::set<std::uint64_t>& bad) {
  for (const auto& L : lpolys) {
    if (L.p == ell || bad.count(L.p) != 0) continue;
    if (is_irreducible_mod(L.poly(), ell)) return L.p;
  }
  return std::nullopt;
}

std::set<Int> dim1_exclusion(const std::vector<LPolynomial>& lpolys) {
  if (lpolys.empty()) throw std::invalid_argument("dim-1 exclusion needs at least one L-polynomial");
  std::vector<std::pair<std::uint64_t, Int>> values;
  for (const auto& L : lpolys) {
    const IntPoly P = L.poly();
    values.emplace_back(L.p, P.eval(Int(1)) * P.eval(Int(L.p)));
  }
  return intersect_supports(values);
}

IntPoly dim2_qpoly(const LPolynomial& lp) { return lp.real_cubic(); }

Dim2Data dim2_exclusion(const std::vector<LPolynomial>& lpolys, const std::vector<HeckeCharPoly>& hecke) {
  Dim2Data out;
  for (const auto& H : hecke) {
    auto it = std::find_if(lpolys.begin(), lpolys.end(), [&](const LPolynomial& L) { return L.p == H.p; });
    if (it == lpolys.end()) continue;
    out.resultants[H.p] = resultant(H.charpoly, dim2_qpoly(*it));
  }
  // The resultants themselves are far too large to factor; only their gcd is.
  std::vector<std::uint64_t> used;
  for (const auto& [p, r] : out.resultants) {
    if (r == 0) continue;
    used.push_back(p);
    out.gcd = gcd(out.gcd, r);
  }
  if (used.empty()) throw std::invalid_argument("no Hecke prime with a nonzero resultant");
  if (used.size() < 2) throw std::invalid_argument("need two Hecke primes with nonzero resultant");
  Int rest = out.gcd;
  for (unsigned long q = 2; q < 100000; ++q) {
    if (rest == 1) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q) != 0) {
      ++out.gcd_factorization[Int(q)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
    }
  }
  if (rest != 1) {
    if (!is_prime(rest) && mpz_sizeinbase(rest.get_mpz_t(), 2) > 100) {
      throw std::runtime_error("gcd of Hecke resultants has an unfactored part of " +
                               std::to_string(mpz_sizeinbase(rest.get_mpz_t(), 10)) + " digits");
    }
    for (const auto& [q, e] : factor(rest)) out.gcd_factorization[q] += e;
  }
  for (const auto& [q, e] : out.gcd_factorization) {
    if (q != 2) out.support.insert(q);
  }
  // l = p escapes the congruence at p itself.
  for (std::uint64_t p0 : used) {
    if (p0 % 2 == 0) continue;
    bool all = true;
    for (std::uint64_t p : used) {
      if (p != p0 && mod_u64(out.resultants[p], p0) != 0) all = false;
    }
    if (all) out.support.insert(Int(p0));
  }
  return out;
}

std::set<Int> nebentypus_escape(const std::set<std::uint64_t>& bad) {
  std::set<Int> out;
  for (std::uint64_t q : bad) {
    for (const Int& l : odd_prime_support(Int(q - 1))) out.insert(l);
  }
  return out;
}

Dim3Solution dim3_solutions(const LPolynomial& lp, unsigned e, std::uint64_t ell) {
  if (e > 1) throw std::invalid_argument("e must be 0 or 1");
  if (ell % 2 == 0 || ell == lp.p || !is_prime(ell)) throw std::invalid_argument("l must be an odd prime different from p");
  const std::uint64_t p = lp.p % ell;
  auto pw = [&](unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * p % ell;
    return r;
  };
  const std::uint64_t k1 = pw(1 - e), k2 = pw(2 - e), k3 = pw(3 - e), ke = pw(e);
  const std::uint64_t a = mod_u64(-lp.a, ell), b = mod_u64(lp.b, ell), c = mod_u64(-lp.c, ell);
  Dim3Solution out{ell, e, {}};
  for (std::uint64_t u = 0; u < ell; ++u) {
    for (std::uint64_t v = 0; v < ell; ++v) {
      if ((k1 * v + u) % ell != a) continue;
      if ((k2 * u + k1 * u % ell * v + v) % ell != b) continue;
      if ((k3 + k2 * (u * u % ell) + k1 * (v * v % ell) + ke) % ell != c) continue;
      out.solutions.emplace(u, v);
    }
  }
  return out;
}

Int dim3_obstruction(const LPolynomial& lp, unsigned e) {
  if (e > 1) throw std::invalid_argument("e must be 0 or 1");
  const Int p(lp.p);
  const Int k1 = int_pow(p, 1 - e), k2 = int_pow(p, 2 - e), k3 = int_pow(p, 3 - e), ke = int_pow(p, e);
  const IntPoly t = IntPoly::x();
  auto C = [](const Int& v) { return IntPoly::constant(v); };

  // u = -a - k1 v
  const IntPoly u = C(-lp.a) - t.scaled(k1);
  const IntPoly A2 = u.scaled(k2) + u * t.scaled(k1) + t - C(lp.b);
  const IntPoly A3 = C(k3 + ke + lp.c) + (u * u).scaled(k2) + (t * t).scaled(k1);
  const Int ra = resultant(A2, A3);

  // k1 v = w := -a - u; equations multiplied by k1.
  const IntPoly w = C(-lp.a) - t;
  const IntPoly B2 = t.scaled(k1 * k2) + (t * w).scaled(k1) + w - C(lp.b * k1);
  const IntPoly B3 = C(k1 * (k3 + ke + lp.c)) + (t * t).scaled(k1 * k2) + w * w;
  const Int rb = resultant(B2, B3);

  Int n = gcd(ra, rb);
  if (n == 0) throw std::runtime_error("dim-3 eliminants vanish identically at p = " + std::to_string(lp.p));
  return abs(n);
}

std::set<Int> dim3_exclusion(const std::vector<LPolynomial>& lpolys) {
  std::set<Int> out = kSmallPrimes;
  for (unsigned e = 0; e <= 1; ++e) {
    std::vector<std::pair<std::uint64_t, Int>> values;
    for (const auto& L : lpolys) values.emplace_back(L.p, dim3_obstruction(L, e));
    for (const Int& l : intersect_supports(values)) out.insert(l);
  }
  return out;
}

ExclusionLedger irreducibility_certify(const std::vector<LPolynomial>& lpolys,
                                        const std::vector<HeckeCharPoly>& hecke,
                                        const std::set<std::uint64_t>& bad) {
  ExclusionLedger led;
  std::vector<LPolynomial> good;
  for (const auto& L : lpolys) {
    if (bad.count(L.p) == 0) good.push_back(L);
  }
  if (good.empty()) throw std::invalid_argument("no L-polynomial at a good prime");

  led.profiles = enumerate_case_profiles();
  for (const auto& c : led.profiles) case_family(c);  // throws on an unhandled profile

  led.escape = nebentypus_escape(bad);
  led.base = led.escape;
  led.base.insert(Int(3));
  for (std::uint64_t q : bad) {
    if (q % 2 == 1) led.base.insert(Int(q));
  }
  led.dim1 = dim1_exclusion(good);
  for (const auto& L : good) {
    led.dim3_obstructions_e0[L.p] = dim3_obstruction(L, 0);
    led.dim3_obstructions_e1[L.p] = dim3_obstruction(L, 1);
  }
  led.dim3 = dim3_exclusion(good);

  std::vector<HeckeCharPoly> usable;
  for (const auto& H : hecke) {
    if (bad.count(H.p) == 0) usable.push_back(H);
  }
  std::string dim2_problem = "no Hecke characteristic polynomials supplied";
  if (!usable.empty()) {
    try {
      led.dim2_data = dim2_exclusion(good, usable);
      led.dim2 = led.dim2_data->support;
    } catch (const std::exception& e) {
      dim2_problem = e.what();
    }
  }
  for (const Int& l : led.escape) led.dim2.insert(l);

  auto add = [&](const std::set<Int>& s, const char* name) {
    for (const Int& l : s) led.entries[l].sources.emplace_back(name);
  };
  add(led.base, "base");
  add(led.dim1, "dim-1");
  add(led.dim2, "dim-2");
  add(led.dim3, "dim-3");

  for (auto& [l, entry] : led.entries) {
    entry.witness = witness_search(good, to_u64(l), bad);
    entry.excluded = entry.witness.has_value();
    if (!entry.excluded) {
      led.open_reasons.push_back("l = " + to_string(l) + ": no table prime p with P_p irreducible mod l; extend frobenius_primes");
    }
  }
  if (!led.dim2_data) {
    led.open_reasons.push_back("dim-2 case open for every l without a witness: " + dim2_problem);
  }
  return led;
}

}  // namespace qcert
