#pragma once

// Arbitrary-precision integers and rationals (GMP) plus the small amount of
// elementary number theory the certifier needs.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qcert {

using Int = mpz_class;
using Rat = mpq_class;

Int parse_int(std::string_view text);
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

Int int_pow(const Int& base, unsigned long exp);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Exact for 64-bit inputs (deterministic Miller-Rabin); GMP's strong
// probable-prime test beyond that.
bool is_prime(std::uint64_t n);
bool is_prime(const Int& n);

std::uint64_t next_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Complete factorization of |n| (n != 0) into primes with multiplicities.
// Trial division, then Pollard rho (Brent) on the cofactor.
std::map<Int, unsigned> factor(const Int& n);

// Odd primes dividing |n|; n must be nonzero.
std::set<Int> odd_prime_support(const Int& n);

// p-adic valuation of a nonzero integer.
unsigned valuation(const Int& n, const Int& p);

std::uint64_t to_u64(const Int& v);
std::int64_t to_i64(const Int& v);

// Residue of v modulo m in [0, m).
std::uint64_t mod_u64(const Int& v, std::uint64_t m);

}  // namespace qcert
