#pragma once

#include "qcert/integer.hpp"

#include <vector>

namespace qcert {

/// Power series over Q truncated at T^precision (coefficients 0..precision-1).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t precision) : c_(precision, Rat(0)) {}
  TruncatedSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

  std::size_t precision() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_.at(i); }
  Rat& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Rat>& coeffs() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  /// exp(s); requires s[0] == 0.
  TruncatedSeries exp() const;
  /// log(s); requires s[0] == 1.
  TruncatedSeries log() const;

 private:
  std::vector<Rat> c_;
};

/// sum_{m>=1} counts[m-1] T^m / m, truncated at T^precision.
TruncatedSeries log_series_from_counts(const std::vector<Int>& counts, std::size_t precision);

}  // namespace qcert
