#include "qcert/curve.hpp"
#include "qcert/mod_poly.hpp"
#include "qcert/resultant.hpp"

#include <algorithm>
#include <optional>

namespace qcert {

namespace {

using Elem = FiniteField::Elem;
using Matrix3 = std::array<std::array<Int, 3>, 3>;

// Value of an integer polynomial at a point of F.
Elem eval_at(const IntPoly& f, const FiniteField& F, Elem x) {
  Elem r = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) r = F.add(F.mul(r, x), F.from_int(f.coeffs()[i]));
  return r;
}

// Specialize the inner variable of a bivariate polynomial at x0.
ModPoly specialize(const BiPoly& g, const FieldPtr& F, Elem x0) {
  std::vector<Elem> c;
  c.reserve(g.coeffs().size());
  for (const auto& a : g.coeffs()) c.push_back(eval_at(a, *F, x0));
  return ModPoly(F, std::move(c));
}

// Same polynomial viewed over an extension (codes of F_p embed unchanged).
ModPoly lift(const ModPoly& f, const FieldPtr& K) { return ModPoly(K, f.coeffs()); }

ModPoly gcd_all(const std::vector<ModPoly>& polys, const FieldPtr& F) {
  ModPoly g(F);
  for (const auto& f : polys) g = gcd(g, f);
  return g;
}

ProjectivePoint normalized(const FiniteField& K, std::array<Elem, 3> v) {
  int last = 2;
  while (last >= 0 && v[static_cast<std::size_t>(last)] == 0) --last;
  if (last < 0) throw std::logic_error("zero vector is not a projective point");
  const Elem inv = K.inv(v[static_cast<std::size_t>(last)]);
  ProjectivePoint pt;
  for (std::size_t i = 0; i < 3; ++i) pt.coords[i] = K.mul(v[i], inv);
  const std::uint64_t p = K.characteristic();
  pt.rational = std::all_of(pt.coords.begin(), pt.coords.end(), [p](Elem c) { return c < p; });
  return pt;
}

bool vanishes_at(const std::array<const TernaryForm*, 4>& forms, const FiniteField& K,
                 const std::array<Elem, 3>& v) {
  return std::all_of(forms.begin(), forms.end(),
                     [&](const TernaryForm* g) { return g->eval(K, v[0], v[1], v[2]) == 0; });
}

struct ScanResult {
  std::vector<std::array<Elem, 3>> points;  // in the scanned model's coordinates
  bool complete = true;
  std::string note;
};

// True when some singular point has x-coordinate a root of the irreducible
// factor u (degree d > 2); checked in F_{p^d}.
std::optional<bool> has_point_over(const ModPoly& u, const std::array<BiPoly, 3>& g, std::uint64_t p) {
  const auto d = static_cast<unsigned>(u.degree());
  FieldPtr L;
  try {
    L = make_field(p, d);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  const auto roots = lift(u, L).roots();
  if (roots.empty()) throw std::logic_error("irreducible factor has no root in its splitting field");
  std::vector<ModPoly> at;
  for (const auto& gi : g) at.push_back(specialize(gi, L, roots.front()));
  return gcd_all(at, L).degree() > 0;
}

// Singular points of the model f, assumed to satisfy f(0, 1, 0) != 0 mod p.
// Returns nullopt when every x-eliminant vanishes mod p.
std::optional<ScanResult> scan_model(const TernaryForm& f, std::uint64_t p) {
  const FieldPtr Fp = make_field(p);
  const FieldPtr K = make_field(p, 2);
  const TernaryForm fx = f.partial(Var::X), fy = f.partial(Var::Y), fz = f.partial(Var::Z);

  const std::array<BiPoly, 3> g{f.dehomogenize(Var::Z, Var::Y), fx.dehomogenize(Var::Z, Var::Y),
                                fy.dehomogenize(Var::Z, Var::Y)};
  const std::array<IntPoly, 3> elim{resultant(g[0], g[1]), resultant(g[0], g[2]), resultant(g[1], g[2])};
  ModPoly h(Fp);
  for (const auto& e : elim) h = gcd(h, reduce(e, Fp));
  if (h.is_zero()) return std::nullopt;

  ScanResult out;
  auto add_from_y_gcd = [&](Elem x0) {
    std::vector<ModPoly> at;
    for (const auto& gi : g) at.push_back(specialize(gi, K, x0));
    const ModPoly gy = gcd_all(at, K);
    if (gy.degree() <= 0) return;
    for (const auto& fac : gy.factor()) {
      if (fac.poly.degree() == 1) {
        out.points.push_back({x0, K->neg(fac.poly.coeff(0)), 1});
      } else {
        out.complete = false;
        out.note = "singular point with coordinates beyond F_p^2";
      }
    }
  };

  if (h.degree() > 0) {
    for (const auto& fac : h.factor()) {
      if (fac.poly.degree() <= 2) {
        for (Elem x0 : lift(fac.poly, K).roots()) add_from_y_gcd(x0);
      } else {
        const auto found = has_point_over(fac.poly, g, p);
        if (!found.has_value() || *found) {
          out.complete = false;
          out.note = found.has_value() ? "singular point with coordinates beyond F_p^2"
                                       : "extension field for a singular candidate is too large";
        }
      }
    }
  }

  // Line z = 0: points (t:1:0), then (1:0:0).
  std::vector<ModPoly> inf;
  for (const TernaryForm* form : {&f, &fx, &fy, &fz}) {
    std::vector<Elem> c;
    for (unsigned i = 0; i <= form->degree(); ++i) c.push_back(Fp->from_int(form->coeff(i, form->degree() - i, 0)));
    inf.emplace_back(Fp, std::move(c));
  }
  const ModPoly u = gcd_all(inf, Fp);
  if (u.is_zero()) {
    out.complete = false;
    out.note = "the line z = 0 is singular";
  } else if (u.degree() > 0) {
    for (const auto& fac : u.factor()) {
      if (fac.poly.degree() <= 2) {
        for (Elem t : lift(fac.poly, K).roots()) out.points.push_back({t, 1, 0});
      } else {
        out.complete = false;
        out.note = "singular point with coordinates beyond F_p^2";
      }
    }
  }
  const std::array<const TernaryForm*, 4> forms{&f, &fx, &fy, &fz};
  if (vanishes_at(forms, *K, {1, 0, 0})) out.points.push_back({1, 0, 0});
  return out;
}

}  // namespace

SingularFiberReport singular_points(const TernaryQuarticForm& f, std::uint64_t p) {
  SingularFiberReport rep;
  rep.p = p;
  if (!is_prime(p)) throw std::invalid_argument("singular_points needs a prime");
  if (mod_u64(f.content(), p) == 0) {
    rep.complete = false;
    rep.note = "p divides the content; the fiber is all of P^2";
    return rep;
  }
  const FieldPtr K = make_field(p, 2);

  // Shear x -> x + a y, z -> z + b y so that (0:1:0) is off the curve; the
  // eliminants then specialize faithfully mod p.
  std::optional<ScanResult> scan;
  Matrix3 m{};
  for (long s = 0; s < 64 && !scan.has_value(); ++s) {
    const long a = s % 8, b = s / 8;
    if (mod_u64(f.eval(Int(a), Int(1), Int(b)), p) == 0) continue;
    m = Matrix3{{{Int(1), Int(a), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(b), Int(1)}}};
    scan = scan_model(f.TernaryForm::substitute(m), p);
  }
  if (!scan.has_value()) {
    rep.complete = false;
    rep.note = "no coordinate shear gave a nonvanishing eliminant";
    return rep;
  }

  std::vector<ProjectivePoint> pts;
  for (const auto& v : scan->points) {
    std::array<Elem, 3> w{};
    for (std::size_t r = 0; r < 3; ++r) {
      Elem s = 0;
      for (std::size_t c = 0; c < 3; ++c) s = K->add(s, K->mul(K->from_int(m[r][c]), v[c]));
      w[r] = s;
    }
    pts.push_back(normalized(*K, w));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const TernaryForm fx = f.partial(Var::X), fy = f.partial(Var::Y), fz = f.partial(Var::Z);
  const std::array<const TernaryForm*, 4> forms{&f, &fx, &fy, &fz};
  for (const auto& pt : pts) {
    if (!vanishes_at(forms, *K, pt.coords)) throw std::logic_error("reported point is not singular");
  }

  // Independent check of the F_p-rational part by exhaustive search.
  if (p <= 1000) {
    const FieldPtr Fp = make_field(p);
    std::vector<ProjectivePoint> brute;
    auto probe = [&](Elem x, Elem y, Elem z) {
      if (vanishes_at(forms, *Fp, {x, y, z})) brute.push_back(normalized(*K, {x, y, z}));
    };
    for (Elem x = 0; x < p; ++x) {
      for (Elem y = 0; y < p; ++y) probe(x, y, 1);
      probe(x, 1, 0);
    }
    probe(1, 0, 0);
    std::sort(brute.begin(), brute.end());
    std::vector<ProjectivePoint> rational;
    for (const auto& pt : pts) {
      if (pt.rational) rational.push_back(pt);
    }
    if (brute != rational) throw std::logic_error("singular point search disagrees with exhaustive scan");
  }

  rep.complete = scan->complete;
  rep.note = scan->note;
  for (const auto& pt : pts) {
    SingularPoint sp;
    sp.point = pt;
    if (pt.rational) {
      sp.classified = true;
      sp.kind = classify_node(f, p, pt.coords);
    }
    rep.points.push_back(sp);
  }
  return rep;
}

NodeClassification classify_node(const TernaryQuarticForm& f, std::uint64_t p, const std::array<std::uint64_t, 3>& point) {
  const FieldPtr Fp = make_field(p);
  for (auto c : point) {
    if (c >= p) throw std::invalid_argument("point is not F_p-rational");
  }
  const ProjectivePoint pt = normalized(*Fp, point);
  const TernaryForm fx = f.partial(Var::X), fy = f.partial(Var::Y), fz = f.partial(Var::Z);
  if (!vanishes_at({&f, &fx, &fy, &fz}, *Fp, pt.coords)) throw std::invalid_argument("point is not singular");

  // Affine chart in (u, v) with the point at integer lift (u0, v0).
  Var chart, vu, vv;
  std::uint64_t u0 = 0, v0 = 0;
  if (pt.coords[2] != 0) {
    chart = Var::Z, vu = Var::X, vv = Var::Y;
    u0 = pt.coords[0], v0 = pt.coords[1];
  } else if (pt.coords[1] != 0) {
    chart = Var::Y, vu = Var::X, vv = Var::Z;
    u0 = pt.coords[0];
  } else {
    chart = Var::X, vu = Var::Y, vv = Var::Z;
  }
  (void)vu;
  const BiPoly F = f.dehomogenize(chart, vv);  // outer v, inner u

  // Coefficient of u^r v^s in F(u + U, v + V).
  auto taylor = [&F](unsigned r, unsigned s, const Int& U, const Int& V) {
    Int t = 0;
    for (std::size_t j = s; j < F.coeffs().size(); ++j) {
      const auto& row = F.coeffs()[j].coeffs();
      for (std::size_t i = r; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        Int bi, bj;
        mpz_bin_uiui(bi.get_mpz_t(), i, r);
        mpz_bin_uiui(bj.get_mpz_t(), j, s);
        t += row[i] * bi * bj * int_pow(U, static_cast<unsigned>(i - r)) * int_pow(V, static_cast<unsigned>(j - s));
      }
    }
    return t;
  };

  const Int P(static_cast<unsigned long>(p)), P2 = P * P;
  const Int U(static_cast<unsigned long>(u0)), V(static_cast<unsigned long>(v0));
  const Int a = taylor(0, 0, U, V), a1 = taylor(1, 0, U, V), a2 = taylor(0, 1, U, V);
  const Int q11 = taylor(2, 0, U, V), q12 = taylor(1, 1, U, V), q22 = taylor(0, 2, U, V);
  auto modp = [&P](const Int& v) { return Int(((v % P) + P) % P); };
  if (modp(a) != 0 || modp(a1) != 0 || modp(a2) != 0) throw std::logic_error("chart expansion is not singular");

  NodeClassification out;
  const Int disc = q12 * q12 - 4 * q11 * q22;
  out.ordinary_node = modp(disc) != 0;

  Int constant = a;
  if (out.ordinary_node) {
    // Solve [[2 q11, q12], [q12, 2 q22]] beta = -(a1, a2) / p mod p, shift by p beta.
    const Int det = modp(4 * q11 * q22 - q12 * q12);
    Int det_inv;
    mpz_invert(det_inv.get_mpz_t(), det.get_mpz_t(), P.get_mpz_t());
    const Int r1 = modp(-Int(a1 / P)), r2 = modp(-Int(a2 / P));
    const Int b1 = modp(det_inv * (2 * q22 * r1 - q12 * r2));
    const Int b2 = modp(det_inv * (2 * q11 * r2 - q12 * r1));
    const Int U1 = U + P * b1, V1 = V + P * b2;
    const Int l1 = taylor(1, 0, U1, V1), l2 = taylor(0, 1, U1, V1);
    if (Int(((l1 % P2) + P2) % P2) != 0 || Int(((l2 % P2) + P2) % P2) != 0) {
      throw std::logic_error("corrective shift did not clear the linear terms mod p^2");
    }
    constant = taylor(0, 0, U1, V1);
  }
  out.total_space_regular = modp(constant) == 0 && Int(((constant % P2) + P2) % P2) != 0;
  return out;
}

Int find_bad_prime_candidates(const TernaryQuarticForm& f) {
  const std::array<std::array<Var, 3>, 3> charts{{{Var::Z, Var::X, Var::Y}, {Var::Y, Var::X, Var::Z}, {Var::X, Var::Y, Var::Z}}};
  Int B = 1;
  for (const auto& ch : charts) {
    const Var chart = ch[0];
    const TernaryForm fu = f.partial(ch[1]), fv = f.partial(ch[2]);
    Int chart_gcd = 0;
    for (const Var outer : {ch[2], ch[1]}) {
      const std::array<BiPoly, 3> g{f.dehomogenize(chart, outer), fu.dehomogenize(chart, outer),
                                    fv.dehomogenize(chart, outer)};
      const std::array<IntPoly, 3> r{resultant(g[0], g[1]), resultant(g[0], g[2]), resultant(g[1], g[2])};
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) chart_gcd = gcd(chart_gcd, resultant(r[i], r[j]));
      }
    }
    if (chart_gcd == 0) throw std::domain_error("all eliminants vanish; the curve is singular over Q");
    B = lcm(B, chart_gcd);
  }
  return abs(B);
}

}  // namespace qcert
