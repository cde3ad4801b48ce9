#include "qcert/curve.hpp"
#include "qcert/mod_poly.hpp"
#include "qcert/resultant.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qcert {

namespace {

using Matrix3 = std::array<std::array<Int, 3>, 3>;

std::array<unsigned, 3> exps_of(unsigned i, unsigned j, unsigned d) { return {i, j, d - i - j}; }

}  // namespace

TernaryForm::TernaryForm(unsigned degree) : d_(degree), c_((degree + 1) * (degree + 1), Int(0)) {}

const Int& TernaryForm::coeff(unsigned i, unsigned j, unsigned k) const {
  if (i + j + k != d_) throw std::invalid_argument("monomial degree does not match form degree");
  return c_[index(i, j)];
}

void TernaryForm::set(unsigned i, unsigned j, unsigned k, Int c) {
  if (i + j + k != d_) throw std::invalid_argument("monomial degree does not match form degree");
  c_[index(i, j)] = std::move(c);
}

bool TernaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& c) { return c == 0; });
}

Int TernaryForm::content() const {
  Int g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  return g;
}

TernaryForm TernaryForm::partial(Var v) const {
  if (d_ == 0) return TernaryForm(0);
  TernaryForm r(d_ - 1);
  const auto vi = static_cast<unsigned>(v);
  for (unsigned i = 0; i <= d_; ++i) {
    for (unsigned j = 0; i + j <= d_; ++j) {
      const Int& c = c_[index(i, j)];
      if (c == 0) continue;
      auto e = exps_of(i, j, d_);
      if (e[vi] == 0) continue;
      const Int mult = c * e[vi];
      --e[vi];
      r.c_[r.index(e[0], e[1])] += mult;
    }
  }
  return r;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
  if (o.d_ != d_) throw std::invalid_argument("adding forms of different degree");
  TernaryForm r = *this;
  for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] += o.c_[t];
  return r;
}

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
  TernaryForm r(d_ + o.d_);
  for (unsigned i = 0; i <= d_; ++i) {
    for (unsigned j = 0; i + j <= d_; ++j) {
      const Int& a = c_[index(i, j)];
      if (a == 0) continue;
      for (unsigned k = 0; k <= o.d_; ++k) {
        for (unsigned l = 0; k + l <= o.d_; ++l) {
          const Int& b = o.c_[o.index(k, l)];
          if (b != 0) r.c_[r.index(i + k, j + l)] += a * b;
        }
      }
    }
  }
  return r;
}

TernaryForm TernaryForm::scaled(const Int& s) const {
  TernaryForm r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

TernaryForm TernaryForm::substitute(const Matrix3& m) const {
  std::array<TernaryForm, 3> lin{TernaryForm(1), TernaryForm(1), TernaryForm(1)};
  for (unsigned v = 0; v < 3; ++v) {
    lin[v].set(1, 0, 0, m[v][0]);
    lin[v].set(0, 1, 0, m[v][1]);
    lin[v].set(0, 0, 1, m[v][2]);
  }
  // powers[v][e] = lin[v]^e
  std::array<std::vector<TernaryForm>, 3> powers;
  for (unsigned v = 0; v < 3; ++v) {
    TernaryForm one(0);
    one.set(0, 0, 0, Int(1));
    powers[v].push_back(one);
    for (unsigned e = 1; e <= d_; ++e) powers[v].push_back(powers[v].back() * lin[v]);
  }
  TernaryForm r(d_);
  for (unsigned i = 0; i <= d_; ++i) {
    for (unsigned j = 0; i + j <= d_; ++j) {
      const Int& c = c_[index(i, j)];
      if (c == 0) continue;
      r = r + (powers[0][i] * powers[1][j] * powers[2][d_ - i - j]).scaled(c);
    }
  }
  return r;
}

Int TernaryForm::eval(const Int& x, const Int& y, const Int& z) const {
  Int s = 0;
  for (unsigned i = 0; i <= d_; ++i) {
    for (unsigned j = 0; i + j <= d_; ++j) {
      const Int& c = c_[index(i, j)];
      if (c != 0) s += c * int_pow(x, i) * int_pow(y, j) * int_pow(z, d_ - i - j);
    }
  }
  return s;
}

FiniteField::Elem TernaryForm::eval(const FiniteField& F, FiniteField::Elem x, FiniteField::Elem y,
                                    FiniteField::Elem z) const {
  std::vector<FiniteField::Elem> px(d_ + 1, 1), py(d_ + 1, 1), pz(d_ + 1, 1);
  for (unsigned e = 1; e <= d_; ++e) {
    px[e] = F.mul(px[e - 1], x);
    py[e] = F.mul(py[e - 1], y);
    pz[e] = F.mul(pz[e - 1], z);
  }
  FiniteField::Elem s = 0;
  for (unsigned i = 0; i <= d_; ++i) {
    for (unsigned j = 0; i + j <= d_; ++j) {
      const Int& c = c_[index(i, j)];
      if (c == 0) continue;
      const auto cm = F.from_int(c);
      if (cm == 0) continue;
      s = F.add(s, F.mul(cm, F.mul(px[i], F.mul(py[j], pz[d_ - i - j]))));
    }
  }
  return s;
}

BiPoly TernaryForm::dehomogenize(Var chart, Var outer) const {
  if (chart == outer) throw std::invalid_argument("outer variable cannot be the chart variable");
  const auto ci = static_cast<unsigned>(chart), oi = static_cast<unsigned>(outer);
  const unsigned ii = 3 - ci - oi;
  std::vector<std::vector<Int>> table(d_ + 1, std::vector<Int>(d_ + 1, Int(0)));
  for (unsigned i = 0; i <= d_; ++i) {
    for (unsigned j = 0; i + j <= d_; ++j) {
      const Int& c = c_[index(i, j)];
      if (c == 0) continue;
      const auto e = exps_of(i, j, d_);
      table[e[oi]][e[ii]] += c;
    }
  }
  std::vector<IntPoly> outer_coeffs;
  outer_coeffs.reserve(table.size());
  for (auto& row : table) outer_coeffs.emplace_back(std::move(row));
  return BiPoly(std::move(outer_coeffs));
}

std::string TernaryForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (unsigned i = d_ + 1; i-- > 0;) {
    for (unsigned j = d_ - i + 1; j-- > 0;) {
      const Int& c = c_[index(i, j)];
      if (c == 0) continue;
      const unsigned k = d_ - i - j;
      out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      const Int mag = abs(c);
      std::string mono;
      auto put = [&mono](char v, unsigned e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      put('x', i);
      put('y', j);
      put('z', k);
      if (mono.empty()) out << qcert::to_string(mag);
      else if (mag == 1) out << mono;
      else out << qcert::to_string(mag) << "*" << mono;
      first = false;
    }
  }
  return first ? "0" : out.str();
}

TernaryQuarticForm::TernaryQuarticForm(const TernaryForm& f) : TernaryForm(f) {
  if (f.degree() != 4) throw std::invalid_argument("a plane quartic needs a degree-4 form");
  if (f.is_zero()) throw std::invalid_argument("the zero form does not define a curve");
}

TernaryQuarticForm curve_from_json(const nlohmann::json& j, bool check_irreducible) {
  if (!j.is_object() || !j.contains("monomials") || !j["monomials"].is_array()) {
    throw std::invalid_argument("curve JSON needs a \"monomials\" array");
  }
  TernaryForm f(4);
  std::set<std::array<unsigned, 3>> seen;
  for (const auto& m : j["monomials"]) {
    const auto get_exp = [&m](const char* key) {
      if (!m.contains(key) || !m[key].is_number_integer() || m[key].get<long>() < 0) {
        throw std::invalid_argument(std::string("monomial exponent \"") + key + "\" must be a non-negative integer");
      }
      return m[key].get<unsigned>();
    };
    const unsigned i = get_exp("i"), jj = get_exp("j"), k = get_exp("k");
    if (i + jj + k != 4) throw std::invalid_argument("monomial exponents must sum to 4");
    if (!seen.insert({i, jj, k}).second) throw std::invalid_argument("duplicate monomial in curve JSON");
    if (!m.contains("coeff")) throw std::invalid_argument("monomial is missing \"coeff\"");
    const auto& c = m["coeff"];
    Int value;
    if (c.is_string()) value = parse_int(c.get<std::string>());
    else if (c.is_number_integer()) value = Int(c.get<long>());
    else throw std::invalid_argument("coefficient must be a decimal string");
    f.set(i, jj, k, value);
  }
  TernaryQuarticForm q(f);
  if (check_irreducible && !certify_irreducible(q)) {
    throw std::invalid_argument("quartic form is not certified irreducible over Q");
  }
  return q;
}

TernaryQuarticForm load_curve(const std::string& path, bool check_irreducible) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed curve file " + path + ": " + e.what());
  }
  return curve_from_json(j, check_irreducible);
}

nlohmann::json curve_to_json(const TernaryQuarticForm& f) {
  nlohmann::json mons = nlohmann::json::array();
  for (unsigned i = 5; i-- > 0;) {
    for (unsigned j = 5 - i; j-- > 0;) {
      const unsigned k = 4 - i - j;
      const Int& c = f.coeff(i, j, k);
      if (c == 0) continue;
      mons.push_back({{"i", i}, {"j", j}, {"k", k}, {"coeff", to_string(c)}});
    }
  }
  return {{"monomials", mons}};
}

bool certify_irreducible(const TernaryQuarticForm& f) {
  for (std::uint64_t p : primes_up_to(97)) {
    if (mod_u64(f.content(), p) == 0) continue;
    const FieldPtr F = make_field(p);
    const std::uint64_t r = std::min<std::uint64_t>(p, 4);
    // Lines through A = (1, a, b) and B = (0, 1, c).
    for (std::uint64_t a = 0; a < r; ++a) {
      for (std::uint64_t b = 0; b < r; ++b) {
        for (std::uint64_t c = 0; c < r; ++c) {
          Matrix3 m{{{Int(1), Int(0), Int(0)},
                     {Int(static_cast<long>(a)), Int(1), Int(0)},
                     {Int(static_cast<long>(b)), Int(static_cast<long>(c)), Int(0)}}};
          const TernaryForm g = f.TernaryForm::substitute(m);
          std::vector<FiniteField::Elem> coeffs(5);
          for (unsigned i = 0; i <= 4; ++i) coeffs[i] = F->from_int(g.coeff(i, 4 - i, 0));
          ModPoly h(F, coeffs);
          if (h.degree() == 4 && h.is_irreducible()) return true;
        }
      }
    }
  }
  return false;
}

std::string to_string(const ProjectivePoint& pt, const FiniteField& K) {
  return "(" + K.to_string(pt.coords[0]) + ":" + K.to_string(pt.coords[1]) + ":" + K.to_string(pt.coords[2]) + ")";
}

}  // namespace qcert
