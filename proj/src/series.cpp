#include "substrata/series.hpp"

namespace substrata {

TruncatedSeries::TruncatedSeries(std::size_t order, const std::vector<std::int64_t>& poly) : coeffs_(order, Rational(0)) {
  for (std::size_t i = 0; i < poly.size() && i < order; ++i) coeffs_[i] = poly[i];
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  if (order > 0) s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  check_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  check_same_order(rhs);
  TruncatedSeries r(order());
  for (std::size_t i = 0; i < order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < order(); ++j) r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& k) const {
  TruncatedSeries r(*this);
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

void TruncatedSeries::mul_binomial(std::int64_t c, int d) {
  if (d <= 0) throw InputError("series", "binomial degree must be positive");
  for (std::size_t i = order(); i-- > static_cast<std::size_t>(d);) coeffs_[i] -= c * coeffs_[i - d];
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (order() == 0) return *this;
  if (coeffs_[0] == 0) throw InputError("series", "cannot invert a series with zero constant term");
  TruncatedSeries r(order());
  r.coeffs_[0] = 1 / coeffs_[0];
  for (std::size_t k = 1; k < order(); ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = -s / coeffs_[0];
  }
  return r;
}

int TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < order(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

bool TruncatedSeries::is_zero() const { return valuation() < 0; }

std::vector<Integer> TruncatedSeries::integer_coefficients() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < order(); ++i) {
    if (denominator(coeffs_[i]) != 1)
      throw ConsistencyError("series", "coefficient of q^" + std::to_string(i) + " is not integral: " + coeffs_[i].str());
    out.push_back(numerator(coeffs_[i]));
  }
  return out;
}

}  // namespace substrata
