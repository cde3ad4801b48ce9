#pragma once

#include "qcert/curve.hpp"
#include "qcert/mod_poly.hpp"

#include <set>
#include <vector>

namespace qcert {

struct Mod2Entry {
  std::uint64_t p = 0;
  std::vector<ModPoly::Factor> factors;  // of P_p mod 2
  Int order;                             // least n with P_p | x^n - 1 mod 2
};

struct Mod2Evidence {
  std::vector<Mod2Entry> entries;
  std::vector<std::uint64_t> skipped;  // P_p mod 2 not separable
  std::set<Int> orders_attained;
  // p whose P_p mod 2 is not the characteristic polynomial of any element of
  // the maximal subgroup S_8 (acting on the 6-dimensional heart of its
  // permutation module).
  std::vector<std::uint64_t> outside_s8;
};

/// Characteristic polynomials over F_2 of all elements of S_8 on the heart of
/// the permutation module, one per cycle type, deduplicated and sorted.
std::vector<ModPoly> s8_heart_charpolys();

/// Orders of Frobenius images mod 2. All p must be odd; input nonempty.
Mod2Evidence mod2_orders(const std::vector<LPolynomial>& lpolys);

enum class Mod2Verdict { Surjective, Inconclusive };

/// Surjective iff orders 7 and 15 both occur and some Frobenius lies outside
/// every conjugate of S_8. By the list of maximal subgroups of Sp_6(F_2), S_8
/// is the only one with elements of order 7 and 15, and it has both.
Mod2Verdict mod2_verdict(const Mod2Evidence& ev);

}  // namespace qcert
