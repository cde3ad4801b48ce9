#pragma once

#include "qcert/curve.hpp"

#include <map>
#include <optional>
#include <set>

namespace qcert {

struct PrimitivityWitness {
  std::uint64_t ell = 0;
  std::uint64_t p = 0;
  bool irreducible_mod_ell = false;
  bool trace_nonzero_mod_ell = false;
};

/// Primes l for which the generic block-size argument does not apply and a
/// witness is needed: l in `bad` and l <= 7.
std::set<std::uint64_t> primitivity_exception_set(const std::set<std::uint64_t>& bad);

/// Both predicates recomputed from the L-polynomial.
PrimitivityWitness check_primitivity_witness(const LPolynomial& lp, std::uint64_t ell);

/// For each l, the first table prime p ∉ bad ∪ {l} with P_p irreducible mod l
/// and a_p ≢ 0 mod l; l maps to nullopt when no table prime works.
std::map<std::uint64_t, std::optional<PrimitivityWitness>> primitivity_witnesses(
    const std::vector<LPolynomial>& lpolys, const std::set<std::uint64_t>& ells,
    const std::set<std::uint64_t>& bad = {});

}  // namespace qcert
