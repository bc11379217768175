#include "hindex/polynomial.hpp"

#include <sstream>

namespace hindex {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t j = 0; j < names_.size(); ++j)
    if (names_[j] == name) return j;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Polynomial::Polynomial(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace(Monomial(ring_->size()), c);
}

Polynomial::Polynomial(RingPtr ring, const Monomial& m, const Rational& c) : ring_(std::move(ring)) {
  if (m.size() != ring_->size()) throw ContextMismatch("monomial length does not match ring");
  if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t j) {
  const auto n = ring->size();
  return Polynomial(std::move(ring), Monomial::variable(n, j));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars())); }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

std::optional<int> Polynomial::homogeneous_degree(std::span<const int> weights) const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int d = m.weighted_degree(weights);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const {
  return is_zero() || homogeneous_degree(weights).has_value();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_context(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw ContextMismatch("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_context(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_context(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  a.check_context(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
  Polynomial r(ring_);
  for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) {
    // Two zero polynomials without a ring compare equal.
    return a.terms_.empty() && b.terms_.empty() && (!a.ring_ || !b.ring_);
  }
  return a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first, then reverse canonical order, for readability.
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.rbegin(), terms_.rend());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first.degree() > y.first.degree(); });
  for (const auto& [m, c] : sorted) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool one = m.is_one();
    if (mag != 1 || one) {
      out << mag.get_str();
      if (!one) out << "*";
    }
    bool first_factor = true;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      if (!first_factor) out << "*";
      first_factor = false;
      out << ring_->name(j);
      if (m[j] > 1) out << "^" << m[j];
    }
  }
  return out.str();
}

Polynomial partial_derivative(const Polynomial& p, std::size_t j) {
  if (j >= p.nvars()) throw PreconditionError("variable index out of range");
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m[j] == 0) continue;
    Monomial d = m;
    d.set(j, m[j] - 1);
    r.add_term(d, c * m[j]);
  }
  return r;
}

}  // namespace hindex
