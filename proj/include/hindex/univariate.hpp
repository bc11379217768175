#pragma once

#include <string>
#include <vector>

#include "hindex/rational.hpp"

namespace hindex {

// Dense univariate polynomial in t, coefficients indexed by degree. Trailing
// zeros are trimmed, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT: constants convert implicitly

  static UPoly monomial(const Rational& c, std::size_t degree);
  // 1 - t^k
  static UPoly one_minus_power(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& t) const;
  UPoly derivative() const;
  UPoly shifted(std::size_t k) const;  // multiply by t^k

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  UPoly operator-() const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  // Euclidean division; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder);
  // Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Univariate rational function num/den with common factors cancelled. The
// denominator is normalized to constant term 1 when that is possible, else
// to a monic leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(UPoly num);  // NOLINT
  RationalFunction(UPoly num, UPoly den);

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  RationalFunction shifted(std::size_t k) const;  // multiply by t^k
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  // First `count` Taylor coefficients at t = 0; needs den(0) != 0.
  std::vector<Rational> expand(std::size_t count) const;

  std::string to_string() const;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

// Exact value f(t0); throws PoleError when the reduced denominator vanishes.
Rational ratfun_eval(const RationalFunction& f, const Rational& t0);

}  // namespace hindex
