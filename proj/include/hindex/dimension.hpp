#pragma once

#include <optional>
#include <vector>

#include "hindex/stdbasis.hpp"
#include "hindex/univariate.hpp"

namespace hindex {

// Vector-space dimension of R^rank / <G> read off a completed basis; nullopt
// means infinite. Local orders give the dimension over the local ring,
// truncated bases the dimension of the quotient by G + m^bound.
std::optional<std::size_t> quotient_dimension(const SubmodulePresentation& basis);

// Explicit monomial basis of the quotient; throws ResourceLimitError when it
// has more than `cap` elements (or is infinite).
std::vector<LeadingTerm> standard_monomials(const SubmodulePresentation& basis, std::size_t cap);

// Graded free module R^rank with generator degrees and a submodule generated
// by homogeneous elements. The ring is graded by positive variable weights.
struct GradedPresentation {
  std::size_t rank = 0;
  std::vector<int> generator_degrees;
  SubmodulePresentation relations;
};

struct PoincareSeriesResult {
  RationalFunction series;
  std::vector<Integer> prefix;
};

// Hilbert-Poincare series of the quotient of R^rank by the relations. Throws
// PreconditionError naming the offending generator if a relation is not
// homogeneous. Only the generators of M.relations are used; its order is
// ignored in favour of a weighted degrevlex order.
PoincareSeriesResult poincare_series(const GradedPresentation& M, const std::vector<int>& weights,
                                     std::size_t prefix_length = 10);

// Hilbert series numerator N(t) of R/(monomials) with R graded by `weights`:
// H = N(t) / prod_j (1 - t^{w_j}).
UPoly hilbert_numerator(std::vector<Monomial> gens, const std::vector<int>& weights);

// Sum_i (-1)^i t^{twist_i} P_i evaluated at t = 1. The alternating sum must be
// a polynomial, otherwise PreconditionError.
Integer alternating_euler(const std::vector<PoincareSeriesResult>& series, const std::vector<int>& twist);
RationalFunction alternating_sum(const std::vector<PoincareSeriesResult>& series, const std::vector<int>& twist);

}  // namespace hindex
