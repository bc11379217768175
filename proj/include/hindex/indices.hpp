#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hindex/curves.hpp"
#include "hindex/dimension.hpp"
#include "hindex/differentials.hpp"

namespace hindex {

// Colength of the ideal of f and the maximal minors of (Jacobian; omega) in
// the local ring (or, for a global order, in the polynomial ring).
std::size_t egz_index(const VarietyGerm& V, const OneForm& omega,
                      const MonomialOrder& order = MonomialOrder::local(), const StdBasisOptions& opts = {});

// dim Omega^1_C / (omega ^ O_C) for a reduced curve. The kernel of
// O_C -> Omega^1_C is zero on a reduced curve, so this is the whole index.
std::size_t hom_index_curve(const VarietyGerm& C, const OneForm& omega,
                            const MonomialOrder& order = MonomialOrder::local(), const StdBasisOptions& opts = {});

struct GradedIndex {
  long index = 0;
  int form_degree = 0;
  std::vector<int> twist;
  std::vector<PoincareSeriesResult> series;  // P_0..P_n
};

// Common degree of A_j dx_j when dx_j has degree w_j - min(w); nullopt if
// omega is not homogeneous.
std::optional<int> form_degree(const OneForm& omega, const std::vector<int>& weights);

// Homological index of a homogeneous form on a weighted homogeneous germ,
// from the Poincare series of Omega^0..Omega^n. Assumes omega has an
// isolated zero on V.
GradedIndex hom_index_graded(const VarietyGerm& V, const OneForm& omega, std::size_t prefix_length = 10);

// Colength of the Jacobian ideal.
std::size_t milnor_hypersurface(const Polynomial& f, const MonomialOrder& order = MonomialOrder::local());

struct NuResult {
  long nu = 0;
  long hom = 0;
  long radial = 0;
  OneForm form;         // the first of the two agreeing draws
  int attempts = 0;
};

// Ind_hom(dl) - Ind_rad(dl) for a seeded generic l, confirmed by a second
// independent draw. Up to five attempts.
NuResult nu_curve(const VarietyGerm& C, const CurveParametrization& param, std::uint64_t seed,
                  const PrecisionPolicy& policy = {});

// Computed invariants of one germ and form. Every value carries the route
// that produced it.
struct IndexReport {
  std::string germ;
  std::string form;
  std::uint64_t seed = 0;
  std::optional<long> egz;
  std::optional<long> hom;
  std::optional<long> radial;
  std::optional<long> nu;
  std::optional<long> nu_direct;
  std::optional<long> tau;
  std::optional<long> milnor_oracle;
  std::optional<long> minimal_hom;
  std::map<std::string, std::string> routes;
  std::map<std::string, bool> consistency;

  // egz == hom when both present; nu == hom - radial when all present.
  void check_consistency();
};

}  // namespace hindex
