#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hindex/differentials.hpp"
#include "hindex/series.hpp"

namespace hindex {

// One branch of a curve germ, given by polynomial coordinate functions of the
// uniformizing parameter t. Series at any precision are derived from it.
struct Branch {
  std::vector<UPoly> coords;

  std::vector<TruncatedSeries> series(std::size_t precision) const;
  // Smallest t-order among the coordinates.
  std::size_t multiplicity() const;
};

struct CurveParametrization {
  std::vector<Branch> branches;

  std::size_t size() const { return branches.size(); }
};

// Throws PreconditionError unless every branch is nonconstant, passes through
// the origin, satisfies every equation of C exactly, and branches are
// pairwise distinct.
void check_parametrization(const VarietyGerm& C, const CurveParametrization& param);

struct BranchPullback {
  TruncatedSeries series;  // coefficient of dt
  std::size_t order = 0;
};

// omega restricted to one branch at the given precision. Throws
// PrecisionError when every known coefficient vanishes.
BranchPullback pullback_form(const OneForm& omega, const Branch& branch, std::size_t precision);

struct PrecisionPolicy {
  std::size_t start = 16;
  std::size_t max = 256;
};

// Pullback with precision doubling from policy.start to policy.max.
BranchPullback pullback_form(const OneForm& omega, const Branch& branch, const PrecisionPolicy& policy);

struct RadialIndex {
  long index = 0;
  std::vector<std::size_t> orders;  // m_i per branch
};

// sum_i m_i + (r - 1), m_i the order of omega on branch i.
RadialIndex radial_index_curve(const OneForm& omega, const CurveParametrization& param,
                               const PrecisionPolicy& policy = {});

// d(l) for l = sum c_j x_j with c_j uniform in [-97, 97].
OneForm random_linear_differential(const RingPtr& ring, std::mt19937_64& rng);

// Among three seeded draws of dl, the first one with the smallest total
// branch order.
OneForm generic_linear_differential(const RingPtr& ring, const CurveParametrization& param, std::mt19937_64& rng,
                                    const PrecisionPolicy& policy = {});

// dim ker(Omega^1_C -> Omega^1 of the normalization), by truncated linear
// algebra; the value must agree for truncation degrees bound - 1 and bound.
std::size_t torsion_tau(const VarietyGerm& C, const CurveParametrization& param, int bound = 8);

// dim Omega^1_C / dO_C by truncated linear algebra, with the same two-bound
// stabilization requirement.
std::size_t nu_direct_curve(const VarietyGerm& C, int bound = 12);

}  // namespace hindex
