#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

#include "hindex/errors.hpp"

namespace hindex {

inline constexpr std::size_t kMaxVariables = 16;

// Exponent vector of fixed length N (the ambient dimension). Stored inline so
// that monomials are cheap to copy inside the reduction loops.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) {
      throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
  }

  Monomial(std::initializer_list<int> exps) : Monomial(exps.size()) {
    std::size_t j = 0;
    for (int e : exps) exps_[j++] = static_cast<Exponent>(e);
  }

  static Monomial variable(std::size_t nvars, std::size_t j, int power = 1) {
    Monomial m(nvars);
    m.exps_[j] = static_cast<Exponent>(power);
    return m;
  }

  std::size_t size() const { return nvars_; }
  int operator[](std::size_t j) const { return exps_[j]; }
  void set(std::size_t j, int e) { exps_[j] = static_cast<Exponent>(e); }

  std::span<const Exponent> exponents() const { return {exps_.data(), nvars_}; }

  int degree() const {
    int d = 0;
    for (std::size_t j = 0; j < nvars_; ++j) d += exps_[j];
    return d;
  }

  int weighted_degree(std::span<const int> w) const {
    if (w.empty()) return degree();
    int d = 0;
    for (std::size_t j = 0; j < nvars_; ++j) d += w[j] * exps_[j];
    return d;
  }

  bool is_one() const {
    for (std::size_t j = 0; j < nvars_; ++j)
      if (exps_[j] != 0) return false;
    return true;
  }

  // True iff this divides other.
  bool divides(const Monomial& other) const {
    assert(nvars_ == other.nvars_);
    for (std::size_t j = 0; j < nvars_; ++j)
      if (exps_[j] > other.exps_[j]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t j = 0; j < nvars_; ++j)
      if (exps_[j] != 0 && other.exps_[j] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_length(a, b);
    Monomial m(a.nvars_);
    for (std::size_t j = 0; j < a.nvars_; ++j) {
      assert(int(a.exps_[j]) + b.exps_[j] <= 0xFFFF);
      m.exps_[j] = static_cast<Exponent>(a.exps_[j] + b.exps_[j]);
    }
    return m;
  }

  // a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    assert(b.divides(a));
    Monomial m(a.nvars_);
    for (std::size_t j = 0; j < a.nvars_; ++j) m.exps_[j] = static_cast<Exponent>(a.exps_[j] - b.exps_[j]);
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars_);
    for (std::size_t j = 0; j < a.nvars_; ++j) m.exps_[j] = std::max(a.exps_[j], b.exps_[j]);
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars_);
    for (std::size_t j = 0; j < a.nvars_; ++j) m.exps_[j] = std::min(a.exps_[j], b.exps_[j]);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && std::equal(a.exps_.begin(), a.exps_.begin() + a.nvars_, b.exps_.begin());
  }

  // Canonical storage order (plain lexicographic on the exponent vector). This
  // is not a term order used by the standard-basis engine.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
    for (std::size_t j = 0; j < a.nvars_; ++j)
      if (auto c = a.exps_[j] <=> b.exps_[j]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = nvars_;
    for (std::size_t j = 0; j < nvars_; ++j) h = h * 1000003u + exps_[j];
    return h;
  }

  static void check_same_length(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw ContextMismatch("monomials of different lengths");
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace hindex
