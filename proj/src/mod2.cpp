#include "qcert/mod2.hpp"
#include "qcert/resultant.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcert {

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ModPoly> s8_heart_charpolys() {
  const FieldPtr F2 = make_field(2);
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur;
  partitions(8, 8, cur, parts);
  // The permutation module has composition factors 1, heart, 1.
  const ModPoly x_plus_1_sq(F2, {1, 0, 1});
  std::vector<ModPoly> out;
  for (const auto& lam : parts) {
    ModPoly f = ModPoly::constant(F2, 1);
    for (unsigned k : lam) f = f * ModPoly::x_pow_minus_one(F2, k);
    auto [q, r] = f.divmod(x_plus_1_sq);
    if (!r.is_zero()) throw std::logic_error("permutation character polynomial not divisible by (x+1)^2");
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

Mod2Evidence mod2_orders(const std::vector<LPolynomial>& lpolys) {
  if (lpolys.empty()) throw std::invalid_argument("mod 2 analysis needs at least one L-polynomial");
  const FieldPtr F2 = make_field(2);
  const std::vector<ModPoly> s8 = s8_heart_charpolys();
  Mod2Evidence ev;
  for (const auto& L : lpolys) {
    if (L.p % 2 == 0) throw std::invalid_argument("Frobenius at p = 2 carries no information mod 2");
    const ModPoly f = reduce(L.poly(), F2);
    if (std::find(s8.begin(), s8.end(), f) == s8.end()) ev.outside_s8.push_back(L.p);
    if (!f.is_squarefree()) {
      ev.skipped.push_back(L.p);
      continue;
    }
    Mod2Entry e;
    e.p = L.p;
    e.factors = f.factor();
    e.order = f.multiplicative_order();
    ev.orders_attained.insert(e.order);
    ev.entries.push_back(std::move(e));
  }
  return ev;
}

Mod2Verdict mod2_verdict(const Mod2Evidence& ev) {
  const bool orders = ev.orders_attained.count(Int(7)) != 0 && ev.orders_attained.count(Int(15)) != 0;
  return orders && !ev.outside_s8.empty() ? Mod2Verdict::Surjective : Mod2Verdict::Inconclusive;
}

}  // namespace qcert
