#include "qcert/facts.hpp"

#include <stdexcept>

namespace qcert {

const std::vector<TrustedFact>& trusted_facts() {
  static const std::vector<TrustedFact> facts{
      {"TF-ADELIC-REDUCTION",
       "For a principally polarized abelian variety A/Q of dimension g with surjective multiplier, if the mod-l "
       "image contains Sp_2g(F_l) for every prime l, then the adelic image is all of GSp_2g(Z^).",
       "Serre, lifting from Sp_2g(F_l) to Sp_2g(Z_l) for l >= 5 with the l = 2, 3 refinements by Landesman et al."},
      {"TF-HALL-CRITERION",
       "A subgroup of Sp_2g(F_l), l odd, acting irreducibly and primitively and containing a transvection contains "
       "Sp_2g(F_l).",
       "Zalesskii and Serezhkin; in this form C. Hall, Bull. LMS 43 (2011), which also gives the direct-sum "
       "decomposition of an imprimitive module under a normal subgroup."},
      {"TF-PICARD-LEFSCHETZ",
       "If the fiber at p is a curve whose only singularities are ordinary double points with regular total space, "
       "then inertia at p acts on the l-adic Tate module (l != p) unipotently through vanishing cycles; with a single "
       "node its image mod l is generated by a transvection.",
       "SGA 7, exposes XV-XVI."},
      {"TF-SP6F2",
       "Maximal subgroups of Sp_6(F_2): the only class whose order is divisible by 5 and 7 is S_8 = O_6^+(2), acting "
       "on the heart of its permutation module.",
       "Conway et al., ATLAS of Finite Groups, Sp6(2)."},
      {"TF-SERRE-CONJECTURE",
       "An odd irreducible 2-dimensional mod-l representation of G_Q arises from a newform of the predicted weight, "
       "level and character; here weight 2, level dividing the product of the bad primes, and trivial character "
       "once l does not divide q - 1 for any bad prime q.",
       "Khare and Wintenberger, Invent. Math. 178 (2009)."},
      {"TF-RAYNAUD",
       "For a prime l of good reduction, the tame inertia weights of the l-torsion of an abelian variety are 0 and 1.",
       "Raynaud, Bull. SMF 102 (1974)."},
      {"TF-TAME-INERTIA",
       "For l of good reduction, the semisimplified action of inertia at l on an irreducible constituent of J[l] "
       "factors through fundamental characters with exponents in {0, 1}; determinants of constituents are powers of "
       "the mod-l cyclotomic character.",
       "Serre, Invent. Math. 15 (1972)."},
      {"TF-MINKOWSKI",
       "Q has no nontrivial extension unramified at every prime, so a character of G_Q unramified everywhere is "
       "trivial.",
       "Minkowski's discriminant bound."},
      {"TF-DELIGNE",
       "Hecke eigenvalues a_p of weight-2 newforms satisfy |a_p| <= 2 sqrt(p), bounding the coefficients of Hecke "
       "characteristic polynomials.",
       "Eichler-Shimura and Weil for weight 2."},
  };
  return facts;
}

const TrustedFact& trusted_fact(const std::string& id) {
  for (const auto& f : trusted_facts()) {
    if (f.id == id) return f;
  }
  throw std::out_of_range("unknown trusted fact " + id);
}

}  // namespace qcert
