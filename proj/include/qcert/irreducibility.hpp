#pragma once

// Exclusion of invariant subspaces of J[l] for odd l. A proper constituent of
// dimension d has determinant chi_l^e; the pairing forces the constituent
// multiset to be closed under (d, e) -> (d, d - e), so every reducible case
// has a constituent of dimension 1, 2 (with e = 1) or 3.

#include "qcert/curve.hpp"
#include "qcert/hecke_data.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

struct CaseProfile {
  std::vector<unsigned> dims;  // nondecreasing, sum 6
  std::vector<unsigned> exps;  // 0 <= exps[i] <= dims[i], sum 3
  auto operator<=>(const CaseProfile&) const = default;
};

/// Which family a profile falls into: the smallest constituent dimension,
/// except that 2-dimensional pieces are always taken with e = 1.
enum class CaseFamily { Dim1, Dim2, Dim3 };

/// Every profile with at least two parts satisfying the determinant and
/// duality constraints, sorted.
std::vector<CaseProfile> enumerate_case_profiles();
CaseFamily case_family(const CaseProfile& c);
/// For a (3,3) profile: the exponent of the constituent chosen so that e <= 1.
unsigned dim3_branch(const CaseProfile& c);

/// First table prime p != l, p not in `bad`, with P_p irreducible mod l.
std::optional<std::uint64_t> witness_search(const std::vector<LPolynomial>& lpolys, std::uint64_t ell,
                                            const std::set<std::uint64_t>& bad = {});

/// Odd primes l for which a 1-dimensional constituent survives: ∩_p of the
/// odd support of P_p(1) P_p(p), together with p itself (the constraint at p
/// says nothing about l = p). Primes where the product is 0 are skipped.
std::set<Int> dim1_exclusion(const std::vector<LPolynomial>& lpolys);

/// x^3 + a x^2 + (b - 3p) x + (c - 2pa).
IntPoly dim2_qpoly(const LPolynomial& lp);

struct Dim2Data {
  std::map<std::uint64_t, Int> resultants;  // r_p = Res(H_p, Q_p), including zeros
  Int gcd;                                  // of the nonzero r_p
  std::map<Int, unsigned> gcd_factorization;
  std::set<Int> support;                    // surviving odd primes
};

/// Pairs each H_p with the L-polynomial at the same p. Surviving l divide
/// every nonzero r_p except possibly the one at p = l. Throws unless at least
/// two resultants are nonzero and their gcd can be factored.
Dim2Data dim2_exclusion(const std::vector<LPolynomial>& lpolys, const std::vector<HeckeCharPoly>& hecke);

/// Odd primes dividing q - 1 for some q in `bad`: where a nontrivial
/// nebentypus could occur.
std::set<Int> nebentypus_escape(const std::set<std::uint64_t>& bad);

struct Dim3Solution {
  std::uint64_t ell = 0;
  unsigned e = 0;
  std::set<std::pair<std::uint64_t, std::uint64_t>> solutions;  // (u, v)
};

/// Exhaustive search over F_l^2 of
///   p^{1-e} v + u = -a,
///   p^{2-e} u + p^{1-e} u v + v = b,
///   p^{3-e} + p^{2-e} u^2 + p^{1-e} v^2 + p^e = -c.
Dim3Solution dim3_solutions(const LPolynomial& lp, unsigned e, std::uint64_t ell);

/// Nonzero N with: l not dividing N·p implies no solution over F_l.
/// gcd of Res_v after eliminating u and Res_u after eliminating v.
Int dim3_obstruction(const LPolynomial& lp, unsigned e);

/// ∪_e ∩_p (odd support of N_p(e) ∪ {p}) ∪ {3, 5, 7}.
std::set<Int> dim3_exclusion(const std::vector<LPolynomial>& lpolys);

struct LedgerEntry {
  bool excluded = false;
  std::optional<std::uint64_t> witness;  // p with P_p irreducible mod l
  std::vector<std::string> sources;      // which finite sets contain l
};

struct ExclusionLedger {
  std::set<Int> dim1, dim2, dim3, base;
  std::set<Int> escape;
  std::optional<Dim2Data> dim2_data;  // empty when no Hecke data was given
  std::map<std::uint64_t, Int> dim3_obstructions_e0, dim3_obstructions_e1;
  std::map<Int, LedgerEntry> entries;
  std::vector<CaseProfile> profiles;
  std::vector<std::string> open_reasons;

  bool all_excluded() const { return open_reasons.empty(); }
};

/// `bad` are the primes of bad reduction. Without Hecke data the
/// 2-dimensional case stays open for every l not covered by a witness, and
/// the ledger records that.
ExclusionLedger irreducibility_certify(const std::vector<LPolynomial>& lpolys,
                                        const std::vector<HeckeCharPoly>& hecke,
                                        const std::set<std::uint64_t>& bad);

}  // namespace qcert
