#pragma once

#include "qcert/curve.hpp"

#include <string>
#include <vector>

namespace qcert::testing {

inline std::string data_path(const std::string& name) { return std::string(QCERT_DATA_DIR) + "/" + name; }

inline const TernaryQuarticForm& bundled_curve() {
  static const TernaryQuarticForm f = load_curve(data_path("quartic_6391.json"));
  return f;
}

inline LPolynomial lp(std::uint64_t p, long a, long b, long c) { return LPolynomial{p, Int(a), Int(b), Int(c)}; }

// The published Frobenius table for the bundled curve.
inline const std::vector<LPolynomial>& table_lpolys() {
  static const std::vector<LPolynomial> t{lp(2, 3, 6, 9),     lp(3, 1, 2, 3),      lp(5, 4, 10, 17),
                                          lp(17, 2, 9, 120),  lp(19, 4, 18, 91),   lp(23, 5, 19, 53),
                                          lp(41, 0, 42, -212), lp(43, 3, -1, -43), lp(73, -4, -43, 581)};
  return t;
}

inline const LPolynomial& table_lpoly(std::uint64_t p) {
  for (const auto& L : table_lpolys()) {
    if (L.p == p) return L;
  }
  throw std::out_of_range("no table prime");
}

inline IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

}  // namespace qcert::testing
