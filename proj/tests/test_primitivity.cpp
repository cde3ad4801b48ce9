#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/primitivity.hpp"
#include "qcert/resultant.hpp"
#include "support.hpp"

using namespace qcert;
using qcert::testing::table_lpoly;
using qcert::testing::table_lpolys;

TEST_CASE("exception set") {
  CHECK(primitivity_exception_set({7, 11, 83}) == std::set<std::uint64_t>{3, 5, 7, 11, 83});
  CHECK(primitivity_exception_set({}) == std::set<std::uint64_t>{3, 5, 7});
}

TEST_CASE("primitivity witnesses") {
  const std::set<std::uint64_t> bad{7, 11, 83};
  const auto w = primitivity_witnesses(table_lpolys(), primitivity_exception_set(bad), bad);
  std::map<std::uint64_t, std::uint64_t> got;
  for (const auto& [l, pw] : w) {
    REQUIRE(pw);
    got[l] = pw->p;
    CHECK(pw->irreducible_mod_ell);
    CHECK(pw->trace_nonzero_mod_ell);
    // recomputed from scratch
    const auto& L = table_lpoly(pw->p);
    CHECK(is_irreducible_mod(L.poly(), l));
    CHECK(mod_u64(L.a, l) != 0);
  }
  CHECK(got == std::map<std::uint64_t, std::uint64_t>{{3, 17}, {5, 43}, {7, 2}, {11, 2}, {83, 19}});
}

TEST_CASE("witness predicates") {
  // P_41 is irreducible mod 5 but a_41 = 0
  const auto c = check_primitivity_witness(table_lpoly(41), 5);
  CHECK(c.irreducible_mod_ell);
  CHECK_FALSE(c.trace_nonzero_mod_ell);
  const auto none = primitivity_witnesses({table_lpoly(41)}, {5}, {});
  CHECK_FALSE(none.at(5));
}
