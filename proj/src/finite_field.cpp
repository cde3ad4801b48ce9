#include "qcert/finite_field.hpp"

#include "qcert/mod_poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qcert {

namespace {

std::uint64_t checked_order(std::uint64_t p, unsigned m) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) throw std::invalid_argument("field order exceeds 2^62");
    q *= p;
  }
  return q;
}

// First monic irreducible of degree m in the canonical enumeration order.
std::vector<std::uint64_t> canonical_modulus(std::uint64_t p, unsigned m) {
  if (m == 1) return {0, 1};
  FieldPtr base = FiniteField::make(p, 1);
  const std::uint64_t count = checked_order(p, m);
  for (std::uint64_t key = 0; key < count; ++key) {
    std::vector<std::uint64_t> coeffs(m + 1, 0);
    std::uint64_t k = key;
    for (unsigned i = 0; i < m; ++i) {
      coeffs[i] = k % p;
      k /= p;
    }
    coeffs[m] = 1;
    if (coeffs[0] == 0) continue;
    ModPoly f(base, coeffs);
    if (f.is_irreducible()) return coeffs;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldPtr FiniteField::make(std::uint64_t p, unsigned m) {
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^32, got " + std::to_string(p));
  }
  checked_order(p, m);

  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({p, m});
    if (it != cache.end()) return it->second;
  }
  auto modulus = canonical_modulus(p, m);
  FieldPtr field(new FiniteField(p, m, std::move(modulus)));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(p, m), field).first->second;
}

FiniteField::FiniteField(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
    : p_(p), m_(m), q_(checked_order(p, m)), modulus_(std::move(modulus)) {
  place_.resize(m_);
  std::uint64_t v = 1;
  for (unsigned i = 0; i < m_; ++i) {
    place_[i] = v;
    v *= p_;
  }
  if (q_ <= kTableLimit) build_tables();
}

void FiniteField::build_tables() {
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_divisors(n);
  Elem g = 0;
  for (Elem c = 1; c < q_; ++c) {
    bool primitive = true;
    for (std::uint64_t r : factors) {
      Elem acc = 1, base = c;
      for (std::uint64_t e = n / r; e != 0; e >>= 1U) {
        if (e & 1U) acc = mul_schoolbook(acc, base);
        base = mul_schoolbook(base, base);
      }
      if (acc == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  primitive_ = g;
  exp_.resize(n);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    exp_[k] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(k);
    x = mul_schoolbook(x, g);
  }
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  auto r = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p_));
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::from_int(const Int& v) const { return mod_u64(v, p_); }

FiniteField::Elem FiniteField::from_digits(std::span<const std::uint64_t> d) const {
  if (d.size() > m_) throw std::invalid_argument("too many digits for field element");
  Elem a = 0;
  for (std::size_t i = 0; i < d.size(); ++i) a += (d[i] % p_) * place_[i];
  return a;
}

std::vector<std::uint64_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint64_t> d(m_);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (m_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * place_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    Elem d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * place_[i];
    a /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (m_ == 1) return a * b % p_;
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  return mul_schoolbook(a, b);
}

FiniteField::Elem FiniteField::mul_schoolbook(Elem a, Elem b) const {
  if (m_ == 1) return a * b % p_;
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m_; ++i) {
      prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
    }
  }
  return from_digits(std::span<const std::uint64_t>(prod.data(), m_));
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

FiniteField::Elem FiniteField::pow(Elem a, const Int& e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Elem r = 1;
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0) r = mul(r, a);
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in finite field");
  if (m_ == 1) {
    // extended Euclid on residues
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      std::int64_t tmp = t - quot * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - quot * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }
  if (!exp_.empty()) {
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1 - l)];
  }
  return pow(a, q_ - 2);
}

std::string FiniteField::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::string out;
  for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
    if (d[static_cast<unsigned>(i)] == 0) continue;
    if (!out.empty()) out += "+";
    const std::string c = std::to_string(d[static_cast<unsigned>(i)]);
    if (i == 0) {
      out += c;
    } else {
      if (d[static_cast<unsigned>(i)] != 1) out += c + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

ZechField::ZechField(const FiniteField& field)
    : base_(&field), p_(field.characteristic()), q_(field.order()), n_(static_cast<std::uint32_t>(field.order() - 1)) {
  if (!field.has_tables() && field.order() > 2) {
    throw std::invalid_argument("ZechField requires a table-backed field");
  }
  if (q_ == 2) {
    // F_2: log tables are trivial; build by hand.
    zech_ = {0};
    minus_one_ = 1;
    return;
  }
  const auto& exp = field.exp_table();
  const auto& log = field.log_table();
  zech_.resize(n_);
  for (std::uint32_t k = 0; k < n_; ++k) {
    const FiniteField::Elem s = field.add(1, exp[k]);
    zech_[k] = s == 0 ? 0 : log[s] + 1;
  }
  minus_one_ = log[field.neg(1)] + 1;
}

ZechField::Elem ZechField::from_code(FiniteField::Elem code) const {
  if (code == 0) return 0;
  if (q_ == 2) return 1;
  return base_->log_table()[code] + 1;
}

FiniteField::Elem ZechField::to_code(Elem a) const {
  if (a == 0) return 0;
  if (q_ == 2) return 1;
  return base_->exp_table()[a - 1];
}

ZechField::Elem ZechField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in finite field");
  const std::uint32_t l = a - 1;
  return (l == 0 ? 0 : n_ - l) + 1;
}

ZechField::Elem ZechField::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t l = (static_cast<std::uint64_t>(a - 1) * (e % n_)) % n_;
  return static_cast<Elem>(l) + 1;
}

}  // namespace qcert
