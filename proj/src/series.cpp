#include "hindex/series.hpp"

#include <sstream>

#include "hindex/errors.hpp"

namespace hindex {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t precision)
    : coeffs_(std::move(coeffs)), precision_(precision) {
  coeffs_.resize(precision_ + 1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t precision) {
  std::vector<Rational> v(precision + 1);
  v[0] = c;
  return {std::move(v), precision};
}

TruncatedSeries TruncatedSeries::from_polynomial(const UPoly& p, std::size_t precision) {
  std::vector<Rational> v(precision + 1);
  for (std::size_t k = 0; k <= precision; ++k) v[k] = p[k];
  return {std::move(v), precision};
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  precision_ = std::min(precision_, o.precision_);
  coeffs_.resize(precision_ + 1);
  for (std::size_t k = 0; k <= precision_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  precision_ = std::min(precision_, o.precision_);
  coeffs_.resize(precision_ + 1);
  for (std::size_t k = 0; k <= precision_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t d = std::min(a.precision_, b.precision_);
  std::vector<Rational> v(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return {std::move(v), d};
}

TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (precision_ == 0) throw PrecisionError("derivative of a series known only at degree 0");
  std::vector<Rational> v(precision_);
  for (std::size_t k = 1; k <= precision_; ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return {std::move(v), precision_ - 1};
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
  if (precision > precision_) throw PrecisionError("cannot extend a truncated series");
  return {std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(precision) + 1), precision};
}

std::string TruncatedSeries::to_string() const {
  std::vector<Rational> v(coeffs_);
  std::ostringstream out;
  out << UPoly(std::move(v)).to_string() << " + O(t^" << precision_ + 1 << ")";
  return out.str();
}

std::optional<std::size_t> series_order(const TruncatedSeries& s) {
  for (std::size_t k = 0; k <= s.precision(); ++k)
    if (s[k] != 0) return k;
  return std::nullopt;
}

TruncatedSeries series_compose(const Polynomial& p, std::span<const TruncatedSeries> branch) {
  if (branch.size() != p.nvars()) throw ContextMismatch("branch length does not match the ring");
  if (branch.empty()) return TruncatedSeries::constant(p.constant_term(), 0);
  const std::size_t d = branch.front().precision();
  for (const auto& s : branch)
    if (s.precision() != d) throw PrecisionError("branch series have different precisions");

  // powers[j][e] = branch[j]^e, filled on demand
  std::vector<std::vector<TruncatedSeries>> powers(branch.size());
  auto power = [&](std::size_t j, int e) -> const TruncatedSeries& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(TruncatedSeries::constant(1, d));
    while (pw.size() <= static_cast<std::size_t>(e)) pw.push_back(pw.back() * branch[j]);
    return pw[static_cast<std::size_t>(e)];
  };

  TruncatedSeries result = TruncatedSeries::constant(0, d);
  for (const auto& [m, c] : p.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(c, d);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] > 0) term = term * power(j, m[j]);
    result += term;
  }
  return result;
}

}  // namespace hindex
