#pragma once

#include "qcert/integer.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qcert {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// The field F_{p^m}, realised as F_p[t]/(modulus).
///
/// Elements are encoded as integers in [0, q): the digits of the code in base
/// p are the coefficients of the residue polynomial, low degree first. For
/// m = 1 the code is simply the residue mod p.
///
/// The modulus is canonical: among monic degree-m polynomials
/// t^m + c_{m-1} t^{m-1} + ... + c_0, ordered by the integer
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1}, it is the first irreducible one.
/// For m = 1 that is the polynomial t.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  /// Fields with q at most this size keep discrete log/exp tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 21;

  static FieldPtr make(std::uint64_t p, unsigned m = 1);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t order() const { return q_; }
  bool is_prime_field() const { return m_ == 1; }
  /// Monic modulus, m + 1 coefficients, low degree first.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;
  Elem from_int(const Int& v) const;
  Elem from_digits(std::span<const std::uint64_t> digits) const;
  std::vector<std::uint64_t> digits(Elem a) const;
  /// The element t (the class of the polynomial variable); for m = 1 this is 0.
  Elem generator_t() const { return m_ == 1 ? 0 : p_; }
  /// Index enumeration: element(i) for i in [0, q) lists every element once.
  Elem element(std::uint64_t i) const { return i; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem pow(Elem a, const Int& e) const;

  bool has_tables() const { return !exp_.empty(); }
  /// Generator of the multiplicative group (only for table-backed fields).
  Elem primitive_element() const { return primitive_; }
  /// Discrete log/exp tables (empty unless has_tables()).
  const std::vector<std::uint32_t>& log_table() const { return log_; }
  const std::vector<std::uint32_t>& exp_table() const { return exp_; }

  std::string to_string(Elem a) const;

 private:
  FiniteField(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);
  Elem mul_schoolbook(Elem a, Elem b) const;
  void build_tables();

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> place_;  // p^i
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  Elem primitive_ = 0;
};

inline FieldPtr make_field(std::uint64_t p, unsigned m = 1) { return FiniteField::make(p, m); }

/// Zech-logarithm view of a table-backed field, for hot kernels.
///
/// An element is 0 for zero and k + 1 for g^k, g the field's primitive
/// element. Multiplication is addition of exponents; addition goes through
/// the Zech table Z(k) = log(1 + g^k).
class ZechField {
 public:
  using Elem = std::uint32_t;

  explicit ZechField(const FiniteField& field);

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem element(std::uint64_t i) const { return static_cast<Elem>(i); }
  Elem from_code(FiniteField::Elem code) const;
  FiniteField::Elem to_code(Elem a) const;
  Elem from_int(std::int64_t v) const { return from_code(base_->from_int(v)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = (a - 1) + (b - 1);
    if (e >= n_) e -= n_;
    return e + 1;
  }
  Elem add(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t k = (b >= a) ? (b - a) : (b + n_ - a);
    std::uint32_t z = zech_[k];
    if (z == 0) return 0;
    std::uint32_t e = (a - 1) + (z - 1);
    if (e >= n_) e -= n_;
    return e + 1;
  }
  Elem neg(Elem a) const { return mul(a, minus_one_); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

 private:
  const FiniteField* base_;
  std::uint64_t p_;
  std::uint64_t q_;
  std::uint32_t n_;  // q - 1
  Elem minus_one_;
  std::vector<std::uint32_t> zech_;
};

}  // namespace qcert
