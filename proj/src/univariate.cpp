#include "hindex/univariate.hpp"

#include <sstream>

#include "hindex/errors.hpp"

namespace hindex {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::one_minus_power(std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[0] += 1;
  v[k] -= 1;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UPoly(std::move(v));
}

UPoly UPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<long>(k));
  return UPoly(std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder) {
  if (b.is_zero()) throw PoleError("polynomial division by zero");
  remainder = a;
  if (a.degree() < b.degree()) {
    quotient = UPoly();
    return;
  }
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lead = b.leading();
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(remainder.degree() - b.degree());
    Rational c = remainder.leading() / lead;
    q[shift] = c;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) remainder.coeffs_[k + shift] -= c * b.coeffs_[k];
    remainder.trim();
  }
  quotient = UPoly(std::move(q));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= Rational(1) / a.leading();
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      out << mag.get_str();
      if (k > 0) out << "*";
    }
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

RationalFunction::RationalFunction(UPoly num) : num_(std::move(num)), den_(Rational(1)) {}

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    UPoly q, r;
    UPoly::divmod(num_, g, q, r);
    num_ = q;
    UPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rational scale = den_[0] != 0 ? den_[0] : den_.leading();
  Rational inv = Rational(1) / scale;
  num_ *= inv;
  den_ *= inv;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::shifted(std::size_t k) const {
  RationalFunction r = *this;
  r.num_ = r.num_.shifted(k);
  r.normalize();
  return r;
}

std::vector<Rational> RationalFunction::expand(std::size_t count) const {
  const Rational d0 = den_[0];
  if (d0 == 0) throw PoleError("series expansion needs a denominator with nonzero constant term");
  std::vector<Rational> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = num_[k];
    for (std::size_t i = 1; i <= k && i < den_.coeffs().size(); ++i) acc -= den_[i] * out[k - i];
    out[k] = acc / d0;
  }
  return out;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) {
    UPoly n = num_;
    n *= Rational(1) / den_[0];
    return n.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rational ratfun_eval(const RationalFunction& f, const Rational& t0) {
  Rational d = f.denominator().eval(t0);
  if (d == 0) throw PoleError("pole at t = " + t0.get_str());
  return f.numerator().eval(t0) / d;
}

}  // namespace hindex
