// Power series in one variable with exact rational coefficients, truncated
// at a fixed order: only the coefficients of q^0 .. q^{order-1} are kept.

#ifndef SUBSTRATA_SERIES_HPP
#define SUBSTRATA_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "substrata/error.hpp"
#include "substrata/exact.hpp"

namespace substrata {

class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order, Rational(0)) {}
  TruncatedSeries(std::size_t order, const std::vector<std::int64_t>& poly);

  static TruncatedSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries scaled(const Rational& k) const;
  /// Multiplies in place by (1 - c q^d).
  void mul_binomial(std::int64_t c, int d);
  /// Multiplicative inverse; the constant term must be nonzero.
  TruncatedSeries inverse() const;

  /// Lowest degree with a nonzero coefficient, or -1 for the zero series.
  int valuation() const;
  bool is_zero() const;
  /// Coefficients as integers; throws if any coefficient is not integral.
  std::vector<Integer> integer_coefficients() const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  void check_same_order(const TruncatedSeries& rhs) const {
    if (rhs.order() != order()) throw InputError("series", "truncation orders differ");
  }
  std::vector<Rational> coeffs_;
};

}  // namespace substrata

#endif  // SUBSTRATA_SERIES_HPP
