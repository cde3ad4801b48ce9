#include "qcert/poly.hpp"
#include "qcert/resultant.hpp"

#include <sstream>

namespace qcert {

namespace {

template <class R>
std::string poly_string(const Poly<R>& f, char var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const R& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    R mag = c < 0 ? R(-c) : c;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out << to_string(mag);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

int sign_of(const Rat& v) { return sgn(v); }

// Sign changes in the Sturm sequence at x (nullptr with dir = +-1 means +-inf).
int sign_changes(const std::vector<RatPoly>& seq, const Rat* x, int dir) {
  int changes = 0, last = 0;
  for (const auto& s : seq) {
    int sg;
    if (x != nullptr) {
      sg = sign_of(s.eval(*x));
    } else {
      sg = sign_of(s.lead());
      if (dir < 0 && s.degree() % 2 == 1) sg = -sg;
    }
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

}  // namespace

std::string to_string(const IntPoly& f, char var) { return poly_string(f, var); }
std::string to_string(const RatPoly& f, char var) { return poly_string(f, var); }

RatPoly to_rat(const IntPoly& f) {
  std::vector<Rat> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

Int content(const IntPoly& f) {
  Int g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c);
  return g;
}

RatPoly monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  const Rat l = f.lead();
  std::vector<Rat> v = f.coeffs();
  for (auto& c : v) c /= l;
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rat> q(r.size() - db, Rat(0));
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rat c = r[k] / b.lead();
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= c * b.coeffs()[i];
    q[k - db] = c;
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.degree() <= 0) return monic(f);
  return monic(divmod(f, gcd(f, f.derivative())).first);
}

int count_real_roots(const RatPoly& f, const Rat* lo, const Rat* hi) {
  if (f.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  RatPoly s0 = squarefree_part(f);
  if (s0.degree() <= 0) return 0;
  std::vector<RatPoly> seq{s0, s0.derivative()};
  while (seq.back().degree() > 0) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return sign_changes(seq, lo, -1) - sign_changes(seq, hi, +1);
}

FiniteField::Elem resultant(const ModPoly& a, const ModPoly& b) {
  const FiniteField& F = a.F();
  if (a.is_zero() || b.is_zero()) return 0;
  FiniteField::Elem acc = 1;
  ModPoly u = a, v = b;
  while (true) {
    if (u.degree() == 0) return F.mul(acc, F.pow(u.lead(), static_cast<std::uint64_t>(v.degree())));
    ModPoly r = v % u;  // Res(u, v) = lc(u)^{deg v - deg r} Res(u, r)
    if (r.is_zero()) return 0;
    acc = F.mul(acc, F.pow(u.lead(), static_cast<std::uint64_t>(v.degree() - r.degree())));
    // Res(u, r) = (-1)^{deg u deg r} Res(r, u)
    if ((u.degree() % 2 == 1) && (r.degree() % 2 == 1)) acc = F.neg(acc);
    v = std::move(u);
    u = std::move(r);
  }
}

Int discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  Int r = RingTraits<Int>::exact_div(resultant(f, f.derivative()), f.lead());
  return ((n * (n - 1) / 2) % 2 == 1) ? Int(-r) : r;
}

ModPoly reduce(const IntPoly& f, const FieldPtr& F) {
  std::vector<FiniteField::Elem> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(F->from_int(c));
  return ModPoly(F, std::move(v));
}

bool is_irreducible_mod(const IntPoly& f, std::uint64_t l) {
  if (f.degree() < 1) throw std::invalid_argument("irreducibility test needs degree >= 1");
  if (mod_u64(f.lead(), l) == 0) {
    throw std::invalid_argument("leading coefficient vanishes mod " + std::to_string(l));
  }
  return reduce(f, FiniteField::make(l)).is_irreducible();
}

}  // namespace qcert
