#pragma once

#include <string>
#include <vector>

#include "hindex/monomial.hpp"

namespace hindex {

// Monomial orderings. Ties among equal (weighted) degree are broken reverse
// lexicographically on the fixed variable list.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, NegDegRevLex, WeightedDegRevLex, NegWeightedDegRevLex };

  MonomialOrder() = default;
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
  static MonomialOrder local() { return MonomialOrder(Kind::NegDegRevLex, {}); }
  static MonomialOrder weighted(std::vector<int> w);
  static MonomialOrder weighted_local(std::vector<int> w);

  // Accepts the CLI spellings: degrevlex, lex, local, wdegrevlex:w1,...,
  // wlocal:w1,...
  static MonomialOrder parse(const std::string& spec);

  Kind kind() const { return kind_; }
  const std::vector<int>& weights() const { return weights_; }
  bool is_local() const { return kind_ == Kind::NegDegRevLex || kind_ == Kind::NegWeightedDegRevLex; }

  // Degree function the order is built on (plain total degree for lex).
  int degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string to_string() const;

 private:
  MonomialOrder(Kind kind, std::vector<int> w) : kind_(kind), weights_(std::move(w)) {}
  static int revlex_tiebreak(const Monomial& a, const Monomial& b);

  Kind kind_ = Kind::DegRevLex;
  std::vector<int> weights_;
};

// Position-over-term extension to free modules: e_0 > e_1 > ... and within one
// component the base order decides. Shifts are the degrees of the free
// generators; they enter ecarts and gradings but not comparisons.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  explicit ModuleOrder(MonomialOrder base, std::vector<int> shifts = {})
      : base_(std::move(base)), shifts_(std::move(shifts)) {}

  const MonomialOrder& base() const { return base_; }
  const std::vector<int>& shifts() const { return shifts_; }
  int shift(std::size_t comp) const { return comp < shifts_.size() ? shifts_[comp] : 0; }
  bool is_local() const { return base_.is_local(); }

  int compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return base_.compare(a, b);
  }

  int degree(const Monomial& m, std::size_t comp) const { return base_.degree(m) + shift(comp); }

 private:
  MonomialOrder base_;
  std::vector<int> shifts_;
};

}  // namespace hindex
