#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hindex/order.hpp"
#include "hindex/polynomial.hpp"

namespace hindex {

// Element of the free module R^rank, one polynomial per component.
using FreeElement = std::vector<Polynomial>;

struct ModuleTerm {
  Monomial mon;
  std::size_t comp = 0;
  Rational coef;
};

// Module element as a term list sorted decreasingly under a ModuleOrder, so
// the leading term is front(). This is the working representation of the
// standard-basis engine.
class ModVec {
 public:
  ModVec() = default;
  ModVec(std::vector<ModuleTerm> terms, const ModuleOrder& order);  // sorts and merges
  static ModVec from_free(const FreeElement& e, const ModuleOrder& order);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const ModuleTerm& lead() const { return terms_.front(); }
  const std::vector<ModuleTerm>& terms() const { return terms_; }

  FreeElement to_free(const RingPtr& ring, std::size_t rank) const;

  // Trusted construction from an already sorted, merged, zero-free list.
  static ModVec from_sorted(std::vector<ModuleTerm> terms) {
    ModVec v;
    v.terms_ = std::move(terms);
    return v;
  }

 private:
  std::vector<ModuleTerm> terms_;
};

struct StdBasisOptions {
  // Maximum number of S-vector reductions before giving up.
  std::size_t pair_cap = 200000;
  // Compute in R/m^bound; needs the plain local order.
  std::optional<int> degree_bound;
};

// Finitely generated submodule of R^rank together with the order that governs
// its leading terms. A presentation returned by standard_basis() is marked as
// completed; dimension counts insist on that mark.
class SubmodulePresentation {
 public:
  SubmodulePresentation(RingPtr ring, std::size_t rank, ModuleOrder order);
  static SubmodulePresentation ideal(RingPtr ring, const std::vector<Polynomial>& gens, MonomialOrder order);

  // Zero generators are dropped.
  void add(const FreeElement& e);
  void add(ModVec v);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  std::size_t size() const { return vecs_.size(); }
  const std::vector<ModVec>& vectors() const { return vecs_; }
  std::vector<FreeElement> generators() const;

  bool is_standard_basis() const { return completed_; }
  // Set when the basis was computed in R/m^bound (terms of total degree >=
  // bound discarded); then it describes the quotient by R + m^bound.
  std::optional<int> degree_bound() const { return degree_bound_; }

 private:
  friend SubmodulePresentation standard_basis(const SubmodulePresentation&, const StdBasisOptions&);

  RingPtr ring_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<ModVec> vecs_;
  bool completed_ = false;
  std::optional<int> degree_bound_;
};

// Buchberger's algorithm for global orders, Mora's tangent cone algorithm for
// local ones. The result is a minimal basis with monic leading terms, sorted
// by leading term; under global orders (and in truncated mode) it is fully
// reduced.
SubmodulePresentation standard_basis(const SubmodulePresentation& gens, const StdBasisOptions& opts = {});

// Global orders: the unique fully reduced remainder. Local orders: Mora's weak
// normal form, i.e. u*e - NF lies in the span for some unit u; when the
// leading module contains a power of every variable in every component, the
// reduction runs modulo the resulting power of the maximal ideal and u = 1.
FreeElement normal_form(const FreeElement& e, const SubmodulePresentation& basis);
ModVec normal_form(const ModVec& e, const SubmodulePresentation& basis);

struct LeadingTerm {
  Monomial mon;
  std::size_t comp = 0;
  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

// Minimal generators of the leading module of a completed basis.
std::vector<LeadingTerm> leading_module(const SubmodulePresentation& basis);

// Receives every basis standard_basis() completes, e.g. for auditing. Not
// thread safe; pass an empty function to detach.
using BasisObserver = std::function<void(const SubmodulePresentation&)>;
void set_basis_observer(BasisObserver obs);

// Every S-vector of the basis has normal form zero with respect to it.
bool satisfies_buchberger_criterion(const SubmodulePresentation& basis);

}  // namespace hindex
