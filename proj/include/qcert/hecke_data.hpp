#pragma once

#include "qcert/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qcert {

/// det(xI - T_p) on weight-2 cusp forms for Gamma_0(N).
struct HeckeCharPoly {
  std::uint64_t level = 0;
  std::uint64_t p = 0;
  IntPoly charpoly;
  bool operator==(const HeckeCharPoly& o) const {
    return level == o.level && p == o.p && charpoly == o.charpoly;
  }
};

/// Genus of X_0(N): 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2.
std::uint64_t genus_x0(std::uint64_t N);

/// Read {"level", "weight", "operators": [{"p", "charpoly": [decimal strings,
/// low degree first]}]}. Each operator must be monic of degree genus_x0(level).
std::vector<HeckeCharPoly> load_hecke_charpolys(const std::string& path);
void store_hecke_charpolys(const std::string& path, const std::vector<HeckeCharPoly>& ops);
std::string hecke_json(const std::vector<HeckeCharPoly>& ops);
std::vector<HeckeCharPoly> parse_hecke_json(const std::string& text);

}  // namespace qcert
