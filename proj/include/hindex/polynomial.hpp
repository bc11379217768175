#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hindex/monomial.hpp"
#include "hindex/rational.hpp"

namespace hindex {

// Variable names of an ambient polynomial ring Q[x_1..x_N].
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t j) const { return names_[j]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

// Sparse polynomial with exact rational coefficients. Zero coefficients are
// never stored, so equality is equality of the term maps.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, const Rational& c);
  Polynomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  static Polynomial variable(RingPtr ring, std::size_t j);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_ ? ring_->size() : 0; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // Lowest total degree of a term; -1 for zero.
  int order() const;
  // Weighted degree if every term has the same weighted degree; the zero
  // polynomial is homogeneous of every degree and yields nullopt.
  std::optional<int> homogeneous_degree(std::span<const int> weights) const;
  bool is_homogeneous(std::span<const int> weights) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }
  Polynomial operator-() const;

  friend Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned e) const;
  Polynomial mul_monomial(const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_context(const Polynomial& other) const;

  RingPtr ring_;
  TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t j);

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace hindex
