#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hindex/polynomial.hpp"
#include "hindex/univariate.hpp"

namespace hindex {

// Power series in t known through degree `precision()` inclusive. Every
// operation reports at most the smallest precision among its operands, so a
// coefficient is never claimed beyond what the inputs determine.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t precision);
  static TruncatedSeries constant(const Rational& c, std::size_t precision);
  static TruncatedSeries from_polynomial(const UPoly& p, std::size_t precision);

  std::size_t precision() const { return precision_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // d/dt; known one degree less than the input.
  TruncatedSeries derivative() const;
  TruncatedSeries truncated(std::size_t precision) const;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_{Rational(0)};
  std::size_t precision_ = 0;
};

// Index of the first nonzero coefficient, nullopt when every known
// coefficient vanishes (zero cannot be told apart from high order).
std::optional<std::size_t> series_order(const TruncatedSeries& s);

// p(branch(t)) with one series per ambient variable, all of equal precision.
TruncatedSeries series_compose(const Polynomial& p, std::span<const TruncatedSeries> branch);

}  // namespace hindex
