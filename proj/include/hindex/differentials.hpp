#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hindex/polynomial.hpp"
#include "hindex/stdbasis.hpp"

namespace hindex {

// Germ at the origin of the variety cut out by `equations` in C^N.
struct VarietyGerm {
  RingPtr ring;
  std::vector<Polynomial> equations;
  int dimension = 0;
  bool icis = false;
  bool reduced = false;
  // Positive variable weights making every equation homogeneous.
  std::optional<std::vector<int>> weights;

  std::size_t ambient_dim() const { return ring->size(); }
  // Checks the declared invariants; throws PreconditionError.
  void validate() const;
};

// omega = sum_j A_j dx_j.
struct OneForm {
  std::vector<Polynomial> coefficients;

  std::size_t size() const { return coefficients.size(); }
  bool is_zero() const;
  std::string to_string() const;
};

OneForm exterior_derivative(const Polynomial& f);

// Increasing index set J standing for dx_J = dx_{j1} ^ ... ^ dx_{jp}.
using IndexSet = std::vector<std::size_t>;

// All p-subsets of {0..n-1} in lexicographic order; the position of a subset
// in this list is its generator index.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t p);

// Position and sign of dx_j ^ dx_J written as +-dx_{J + j}; nullopt if j is
// already in J. The sign is (-1)^{#{k in J : k < j}}.
std::optional<std::pair<IndexSet, int>> wedge_insert(std::size_t j, const IndexSet& J);

// Kaehler presentation of Omega^p of the germ over the ambient ring: free on
// dx_J (|J| = p) modulo f_s dx_J and df_s ^ dx_K (|K| = p - 1).
struct DifferentialPresentation {
  std::size_t p = 0;
  std::vector<IndexSet> basis;
  std::vector<FreeElement> relations;

  std::size_t rank() const { return basis.size(); }
  // Degree of dx_J when dx_j has degree w_j - min(w); for equal weights every
  // dx_j has degree 0.
  std::vector<int> generator_degrees(const std::vector<int>& weights) const;
  SubmodulePresentation submodule(const RingPtr& ring, const ModuleOrder& order) const;
};

DifferentialPresentation kaehler_presentation(const VarietyGerm& V, std::size_t p);

// Degree of dx_j in the grading used for differential forms.
std::vector<int> differential_degrees(const std::vector<int>& weights);

// Matrix of eta -> omega ^ eta from degree p to degree p + 1: entry (J', J)
// is the coefficient of dx_J' in omega ^ dx_J. Rows follow index_subsets(N,
// p+1), columns index_subsets(N, p).
std::vector<std::vector<Polynomial>> wedge_matrix(const OneForm& omega, std::size_t p);

// Determinant by the Leibniz formula.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

// f_1..f_k and the (k+1)-minors of the Jacobian of f with the row (A_1..A_N)
// appended.
std::vector<Polynomial> minors_ideal(const VarietyGerm& V, const OneForm& omega);

}  // namespace hindex
