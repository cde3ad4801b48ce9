#include "qcert/integer.hpp"

#include <stdexcept>

namespace qcert {

Int parse_int(std::string_view text) {
  std::string s(text);
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
  return v;
}

std::string to_string(const Int& v) { return v.get_str(10); }
std::string to_string(const Rat& v) { return v.get_str(10); }

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1U;
  }
  return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

Int pollard_brent(const Int& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t()) != 0) return Int(2);
  Int y = seed % n, c = (seed * 7 + 3) % n, g = 1, q = 1, x, ys;
  const unsigned long m = 128;
  unsigned long r = 1;
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = (y * y + c) % n;
        Int diff = x - y;
        q = (q * abs(diff)) % n;
      }
      g = gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      Int diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    Int d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      Int rest = n / d;
      factor_into(rest, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) != 0) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::map<Int, unsigned> factor(const Int& n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  Int m = abs(n);
  std::map<Int, unsigned> out;
  for (unsigned long p = 2; p < 100000 && m > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++out[Int(p)];
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
    if (Int(p) * p > m) break;
  }
  factor_into(m, out);
  return out;
}

std::set<Int> odd_prime_support(const Int& n) {
  std::set<Int> out;
  for (const auto& [p, e] : factor(n)) {
    if (p != 2) out.insert(p);
  }
  return out;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  Int m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

std::uint64_t to_u64(const Int& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw std::overflow_error("integer does not fit in uint64");
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

std::int64_t to_i64(const Int& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) == 0) throw std::overflow_error("integer does not fit in int64");
  return v.get_si();
}

std::uint64_t mod_u64(const Int& v, std::uint64_t m) {
  Int r;
  Int mm;
  mpz_import(mm.get_mpz_t(), 1, -1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
  return to_u64(r);
}

}  // namespace qcert
