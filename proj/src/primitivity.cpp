#include "qcert/primitivity.hpp"
#include "qcert/resultant.hpp"

#include <stdexcept>

namespace qcert {

std::set<std::uint64_t> primitivity_exception_set(const std::set<std::uint64_t>& bad) {
  std::set<std::uint64_t> out{3, 5, 7};
  for (std::uint64_t q : bad) {
    if (q % 2 == 1) out.insert(q);
  }
  return out;
}

PrimitivityWitness check_primitivity_witness(const LPolynomial& lp, std::uint64_t ell) {
  PrimitivityWitness w;
  w.ell = ell;
  w.p = lp.p;
  w.irreducible_mod_ell = is_irreducible_mod(lp.poly(), ell);
  w.trace_nonzero_mod_ell = mod_u64(lp.a, ell) != 0;
  return w;
}

std::map<std::uint64_t, std::optional<PrimitivityWitness>> primitivity_witnesses(
    const std::vector<LPolynomial>& lpolys, const std::set<std::uint64_t>& ells, const std::set<std::uint64_t>& bad) {
  std::map<std::uint64_t, std::optional<PrimitivityWitness>> out;
  for (std::uint64_t ell : ells) {
    if (ell % 2 == 0 || !is_prime(ell)) throw std::invalid_argument("primitivity needs odd primes l");
    auto& slot = out[ell];
    for (const auto& L : lpolys) {
      if (L.p == ell || bad.count(L.p) != 0) continue;
      PrimitivityWitness w = check_primitivity_witness(L, ell);
      if (w.irreducible_mod_ell && w.trace_nonzero_mod_ell) {
        slot = w;
        break;
      }
    }
  }
  return out;
}

}  // namespace qcert
