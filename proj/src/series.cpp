#include "qcert/series.hpp"

#include <stdexcept>

namespace qcert {

namespace {

void same_precision(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.precision() != b.precision()) throw std::invalid_argument("series precision mismatch");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  same_precision(*this, o);
  TruncatedSeries r(precision());
  for (std::size_t i = 0; i < precision(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  same_precision(*this, o);
  TruncatedSeries r(precision());
  for (std::size_t i = 0; i < precision(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  same_precision(*this, o);
  const std::size_t n = precision();
  TruncatedSeries r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

// E' = s' E, so n E_n = sum_{k=1}^{n} k s_k E_{n-k}.
TruncatedSeries TruncatedSeries::exp() const {
  const std::size_t n = precision();
  if (n == 0) return *this;
  if (c_[0] != 0) throw std::domain_error("exp of a series with nonzero constant term");
  TruncatedSeries e(n);
  e.c_[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += Rat(static_cast<long>(k)) * c_[k] * e.c_[m - k];
    e.c_[m] = acc / static_cast<long>(m);
  }
  return e;
}

// L' = s'/s, so n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}.
TruncatedSeries TruncatedSeries::log() const {
  const std::size_t n = precision();
  if (n == 0) return *this;
  if (c_[0] != 1) throw std::domain_error("log of a series with constant term != 1");
  TruncatedSeries l(n);
  for (std::size_t m = 1; m < n; ++m) {
    Rat acc = Rat(static_cast<long>(m)) * c_[m];
    for (std::size_t k = 1; k < m; ++k) acc -= Rat(static_cast<long>(k)) * l.c_[k] * c_[m - k];
    l.c_[m] = acc / static_cast<long>(m);
  }
  return l;
}

TruncatedSeries log_series_from_counts(const std::vector<Int>& counts, std::size_t precision) {
  TruncatedSeries s(precision);
  for (std::size_t m = 1; m < precision && m <= counts.size(); ++m) {
    s[m] = Rat(counts[m - 1], Int(static_cast<long>(m)));
    s[m].canonicalize();
  }
  return s;
}

}  // namespace qcert
