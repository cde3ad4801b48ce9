#include "qcert/mod_poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qcert {

namespace {

constexpr std::uint64_t kSplitSeed = 0x9e3779b97f4a7c15ULL;

Int field_order(const FiniteField& F) {
  Int q;
  const std::uint64_t v = F.order();
  mpz_import(q.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return q;
}

ModPoly x_poly(const FieldPtr& F) { return ModPoly::monomial(F, 1, 1); }

// x^(q^k) mod f
ModPoly frobenius_power(const ModPoly& f, unsigned k) {
  const Int q = field_order(f.F());
  ModPoly h = x_poly(f.field()) % f;
  for (unsigned i = 0; i < k; ++i) h = h.pow_mod(q, f);
  return h;
}

// a^(1/p) in F_q: the inverse of Frobenius is a -> a^(q/p).
FiniteField::Elem pth_root(const FiniteField& F, FiniteField::Elem a) {
  return F.pow(a, F.order() / F.characteristic());
}

void equal_degree_split(const ModPoly& f, unsigned d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f);
    return;
  }
  const FiniteField& F = f.F();
  const std::uint64_t q = F.order();
  const std::uint64_t p = F.characteristic();
  const ModPoly one = ModPoly::constant(f.field(), 1);
  Int exponent;
  if (p != 2) {
    exponent = (int_pow(field_order(F), d) - 1) / 2;
  }
  for (;;) {
    std::vector<FiniteField::Elem> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& c : coeffs) c = rng() % q;
    ModPoly h(f.field(), coeffs);
    if (h.degree() < 1) continue;
    ModPoly g(f.field());
    if (p != 2) {
      g = gcd(f, h.pow_mod(exponent, f) - one);
    } else {
      // absolute trace from F_{q^d} to F_2
      const unsigned steps = F.degree() * d;
      ModPoly t = h % f, acc = h % f;
      for (unsigned i = 1; i < steps; ++i) {
        t = t.mul_mod(t, f);
        acc = acc + t;
      }
      g = gcd(f, acc);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

ModPoly::ModPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= field_->order();
  normalize();
}

ModPoly ModPoly::constant(FieldPtr field, Elem c) { return ModPoly(std::move(field), {c}); }

ModPoly ModPoly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return ModPoly(std::move(field), std::move(v));
}

ModPoly ModPoly::x_pow_minus_one(FieldPtr field, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = 1;
  v[0] = field->neg(1);
  if (n == 0) v = {0};
  return ModPoly(std::move(field), std::move(v));
}

void ModPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
  if (is_zero()) throw std::domain_error("monic of zero polynomial");
  const Elem inv = F().inv(lead());
  return scaled(inv);
}

ModPoly ModPoly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = F().mul(c_[i], c);
  return ModPoly(field_, std::move(v));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(field_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = F().mul(c_[i], F().from_int(static_cast<std::int64_t>(i % F().characteristic())));
  }
  return ModPoly(field_, std::move(v));
}

ModPoly::Elem ModPoly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F().add(F().mul(r, x), c_[i]);
  return r;
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F().add(coeff(i), o.coeff(i));
  return ModPoly(field_, std::move(v));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F().sub(coeff(i), o.coeff(i));
  return ModPoly(field_, std::move(v));
}

ModPoly ModPoly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F().neg(c_[i]);
  return ModPoly(field_, std::move(v));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  if (is_zero() || o.is_zero()) return ModPoly(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = F().add(v[i + j], F().mul(c_[i], o.c_[j]));
  }
  return ModPoly(field_, std::move(v));
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {ModPoly(field_), *this};
  std::vector<Elem> r = c_;
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  std::vector<Elem> quot(r.size() - dd, 0);
  const Elem inv = F().inv(d.lead());
  for (std::size_t k = r.size(); k-- > dd;) {
    const Elem c = F().mul(r[k], inv);
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) r[k - dd + i] = F().sub(r[k - dd + i], F().mul(c, d.c_[i]));
  }
  r.resize(dd);
  return {ModPoly(field_, std::move(quot)), ModPoly(field_, std::move(r))};
}

ModPoly ModPoly::pow_mod(const Int& e, const ModPoly& m) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  ModPoly base = *this % m;
  ModPoly r = ModPoly::constant(field_, 1) % m;
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = r.mul_mod(r, m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0) r = r.mul_mod(base, m);
  }
  return r;
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

bool ModPoly::is_squarefree() const {
  if (is_zero()) return false;
  if (degree() <= 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

bool ModPoly::is_irreducible() const {
  if (degree() < 1) return false;
  if (degree() == 1) return true;
  const ModPoly f = monic();
  const auto n = static_cast<unsigned>(f.degree());
  const ModPoly x = x_poly(field_) % f;
  if (!(frobenius_power(f, n) == x)) return false;
  std::vector<unsigned> prime_divisors;
  unsigned m = n;
  for (unsigned r = 2; r <= m; ++r) {
    if (m % r == 0) {
      prime_divisors.push_back(r);
      while (m % r == 0) m /= r;
    }
  }
  for (unsigned r : prime_divisors) {
    if (gcd(f, frobenius_power(f, n / r) - x).degree() != 0) return false;
  }
  return true;
}

std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& input) {
  if (input.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<ModPoly, unsigned>> out;
  if (input.degree() == 0) return out;
  const FieldPtr& Fp = input.field();
  const FiniteField& F = *Fp;
  const ModPoly f = input.monic();
  const ModPoly one = ModPoly::constant(Fp, 1);

  ModPoly c = gcd(f, f.derivative());
  if (f.derivative().is_zero()) c = f;
  ModPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd(w, c);
    ModPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<std::size_t>(F.characteristic());
    std::vector<FiniteField::Elem> root((c.coeffs().size() - 1) / p + 1, 0);
    for (std::size_t k = 0; k < root.size(); ++k) root[k] = pth_root(F, c.coeff(k * p));
    for (auto& [g, m] : squarefree_decomposition(ModPoly(Fp, root))) {
      out.emplace_back(g, m * static_cast<unsigned>(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<std::pair<ModPoly, unsigned>> distinct_degree_factorization(const ModPoly& input) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly f = input.monic();
  const Int q = field_order(f.F());
  const ModPoly x = x_poly(f.field());
  ModPoly h = x % f;
  unsigned d = 1;
  while (f.degree() >= 2 * static_cast<int>(d)) {
    h = h.pow_mod(q, f);
    ModPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
    ++d;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

std::vector<ModPoly> equal_degree_factorization(const ModPoly& f, unsigned d) {
  std::mt19937_64 rng(kSplitSeed);
  std::vector<ModPoly> out;
  equal_degree_split(f.monic(), d, rng, out);
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool factor_less(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

std::vector<ModPoly::Factor> ModPoly::factor() const {
  if (is_zero()) throw std::domain_error("factorization of the zero polynomial");
  std::vector<Factor> out;
  for (const auto& [sqf, mult] : squarefree_decomposition(*this)) {
    for (const auto& [part, d] : distinct_degree_factorization(sqf)) {
      for (auto& g : equal_degree_factorization(part, d)) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return factor_less(a.poly, b.poly);
  });
  return out;
}

std::vector<ModPoly::Elem> ModPoly::roots() const {
  if (is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<Elem> out;
  if (degree() < 1) return out;
  const ModPoly f = monic();
  const ModPoly x = x_poly(field_);
  const ModPoly split = gcd(f, x.pow_mod(field_order(F()), f) - x);
  if (split.degree() < 1) return out;
  for (const auto& lin : equal_degree_factorization(split, 1)) out.push_back(F().neg(lin.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

Int ModPoly::multiplicative_order() const {
  if (is_zero() || degree() < 1) throw std::domain_error("multiplicative order needs a nonconstant polynomial");
  if (coeff(0) == 0) throw std::domain_error("multiplicative order undefined: f(0) = 0");
  if (!is_squarefree()) throw std::domain_error("multiplicative order undefined: f is not squarefree");
  const Int q = field_order(F());
  const ModPoly x = x_poly(field_);
  Int order = 1;
  for (const auto& fac : factor()) {
    const ModPoly& g = fac.poly;
    const Int group = int_pow(q, static_cast<unsigned long>(g.degree())) - 1;
    Int n = group;
    for (const auto& [r, e] : qcert::factor(group)) {
      for (unsigned k = 0; k < e; ++k) {
        const Int cand = n / r;
        if (x.pow_mod(cand, g).is_one()) {
          n = cand;
        } else {
          break;
        }
      }
    }
    order = lcm(order, n);
  }
  return order;
}

std::string ModPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string c = F().to_string(c_[i]);
    const bool compound = c.find('+') != std::string::npos;
    if (i == 0) {
      out += compound ? "(" + c + ")" : c;
      continue;
    }
    if (c != "1") out += compound ? "(" + c + ")*" : c + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace qcert
