#include "hindex/curves.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hindex/dimension.hpp"
#include "hindex/linalg.hpp"

namespace hindex {

std::vector<TruncatedSeries> Branch::series(std::size_t precision) const {
  std::vector<TruncatedSeries> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(TruncatedSeries::from_polynomial(c, precision));
  return out;
}

std::size_t Branch::multiplicity() const {
  std::size_t m = SIZE_MAX;
  for (const auto& c : coords) {
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      if (c.coeffs()[k] != 0) {
        m = std::min(m, k);
        break;
      }
    }
  }
  return m;
}

void check_parametrization(const VarietyGerm& C, const CurveParametrization& param) {
  const std::size_t n = C.ambient_dim();
  if (param.branches.empty()) throw PreconditionError("parametrization without branches");
  std::size_t top = 1;
  for (std::size_t b = 0; b < param.size(); ++b) {
    const auto& br = param.branches[b];
    if (br.coords.size() != n) {
      throw PreconditionError("branch " + std::to_string(b) + " needs " + std::to_string(n) + " coordinates");
    }
    bool nonconstant = false;
    for (const auto& c : br.coords) {
      if (c[0] != 0) throw PreconditionError("branch " + std::to_string(b) + " does not pass through the origin");
      if (!c.is_zero()) nonconstant = true;
      top = std::max<std::size_t>(top, static_cast<std::size_t>(std::max(c.degree(), 0)));
    }
    if (!nonconstant) throw PreconditionError("branch " + std::to_string(b) + " is constant");
  }
  for (const auto& f : C.equations) {
    const auto precision = top * static_cast<std::size_t>(std::max(f.degree(), 1));
    for (std::size_t b = 0; b < param.size(); ++b) {
      auto s = param.branches[b].series(precision);
      if (!series_compose(f, s).is_zero()) {
        throw PreconditionError("branch " + std::to_string(b) + " does not satisfy " + f.to_string());
      }
    }
  }
  for (std::size_t a = 0; a < param.size(); ++a)
    for (std::size_t b = a + 1; b < param.size(); ++b)
      if (param.branches[a].coords == param.branches[b].coords) {
        throw PreconditionError("branches " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
      }
}

BranchPullback pullback_form(const OneForm& omega, const Branch& branch, std::size_t precision) {
  if (omega.size() != branch.coords.size()) throw ContextMismatch("form and branch live in different spaces");
  auto phi = branch.series(precision);
  TruncatedSeries acc = TruncatedSeries::constant(0, precision);
  for (std::size_t j = 0; j < omega.size(); ++j) {
    if (omega.coefficients[j].is_zero()) continue;
    auto dphi = TruncatedSeries::from_polynomial(branch.coords[j].derivative(), precision);
    acc += series_compose(omega.coefficients[j], phi) * dphi;
  }
  auto order = series_order(acc);
  if (!order) {
    throw PrecisionError("pullback vanishes through degree " + std::to_string(precision) +
                         "; order undetermined at this precision");
  }
  return {std::move(acc), *order};
}

BranchPullback pullback_form(const OneForm& omega, const Branch& branch, const PrecisionPolicy& policy) {
  for (std::size_t d = policy.start;; d *= 2) {
    d = std::min(d, policy.max);
    try {
      return pullback_form(omega, branch, d);
    } catch (const PrecisionError&) {
      if (d >= policy.max) {
        throw PrecisionError("form vanishes on a branch to precision " + std::to_string(policy.max) +
                             "; the singularity is not isolated");
      }
    }
  }
}

RadialIndex radial_index_curve(const OneForm& omega, const CurveParametrization& param,
                               const PrecisionPolicy& policy) {
  RadialIndex out;
  for (const auto& br : param.branches) {
    auto pb = pullback_form(omega, br, policy);
    out.orders.push_back(pb.order);
    out.index += static_cast<long>(pb.order);
  }
  out.index += static_cast<long>(param.size()) - 1;
  return out;
}

OneForm random_linear_differential(const RingPtr& ring, std::mt19937_64& rng) {
  OneForm w;
  for (std::size_t j = 0; j < ring->size(); ++j) {
    long c = static_cast<long>(rng() % 195) - 97;
    w.coefficients.emplace_back(ring, Rational(c));
  }
  return w;
}

OneForm generic_linear_differential(const RingPtr& ring, const CurveParametrization& param, std::mt19937_64& rng,
                                    const PrecisionPolicy& policy) {
  std::optional<OneForm> best;
  long best_total = 0;
  for (int draw = 0; draw < 3; ++draw) {
    OneForm w = random_linear_differential(ring, rng);
    try {
      long total = radial_index_curve(w, param, policy).index;
      if (!best || total < best_total) {
        best = std::move(w);
        best_total = total;
      }
    } catch (const PrecisionError&) {
    }
  }
  if (!best) throw PrecisionError("no generic linear form found in three draws");
  return *best;
}

namespace {

// Omega^1 of the germ modulo m^D, as a basis of standard monomials.
class TruncatedOmega {
 public:
  TruncatedOmega(const VarietyGerm& C, int D)
      : ring_(C.ring),
        n_(C.ambient_dim()),
        basis_(standard_basis(kaehler_presentation(C, 1).submodule(C.ring, ModuleOrder(MonomialOrder::local())),
                              StdBasisOptions{200000, D})) {
    monomials_ = standard_monomials(basis_, 1u << 20);
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_[{monomials_[k].comp, monomials_[k].mon}] = k;
  }

  std::size_t size() const { return monomials_.size(); }
  const std::vector<LeadingTerm>& monomials() const { return monomials_; }

  // Coordinates of v in the standard monomial basis; only those of degree
  // < B are kept (the projection onto Omega^1 / m^B Omega^1).
  SparseRow coordinates(const FreeElement& v, int B) const {
    ModVec nf = normal_form(ModVec::from_free(v, basis_.order()), basis_);
    SparseRow row;
    for (const auto& t : nf.terms()) {
      if (t.mon.degree() >= B) continue;
      row.emplace_back(index_.at({t.comp, t.mon}), t.coef);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

  std::size_t count_below(int B) const {
    return static_cast<std::size_t>(std::count_if(monomials_.begin(), monomials_.end(),
                                                  [B](const LeadingTerm& t) { return t.mon.degree() < B; }));
  }

 private:
  RingPtr ring_;
  std::size_t n_;
  SubmodulePresentation basis_;
  std::vector<LeadingTerm> monomials_;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index_;
};

void require_reduced_curve(const VarietyGerm& C) {
  if (C.dimension != 1) throw PreconditionError("germ is not declared as a curve");
  if (!C.reduced) throw PreconditionError("curve is not declared reduced");
}

}  // namespace

std::size_t nu_direct_curve(const VarietyGerm& C, int bound) {
  require_reduced_curve(C);
  if (bound < 2) throw PreconditionError("bound must be at least 2");
  TruncatedOmega omega(C, bound);
  const std::size_t n = C.ambient_dim();

  auto nu_at = [&](int B) {
    RowEchelon ech(omega.size());
    Monomial alpha(n);
    // d(x^alpha) for 1 <= |alpha| <= B
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
      if (j == n) {
        if (alpha.is_one()) return;
        Polynomial xa(C.ring, alpha);
        FreeElement d;
        for (std::size_t i = 0; i < n; ++i) d.push_back(partial_derivative(xa, i));
        ech.insert(omega.coordinates(d, B));
        return;
      }
      for (int e = 0; e <= left; ++e) {
        alpha.set(j, e);
        rec(j + 1, left - e);
      }
      alpha.set(j, 0);
    };
    rec(0, B);
    return omega.count_below(B) - ech.rank();
  };

  std::size_t lo = nu_at(bound - 1);
  std::size_t hi = nu_at(bound);
  if (lo != hi) {
    throw PrecisionError("dim Omega^1/dO did not stabilize (" + std::to_string(lo) + " at bound " +
                         std::to_string(bound - 1) + ", " + std::to_string(hi) + " at bound " +
                         std::to_string(bound) + ")");
  }
  return hi;
}

std::size_t torsion_tau(const VarietyGerm& C, const CurveParametrization& param, int bound) {
  require_reduced_curve(C);
  check_parametrization(C, param);
  if (bound < 2) throw PreconditionError("bound must be at least 2");
  const int D = 2 * bound + 2;
  TruncatedOmega omega(C, D);

  std::size_t mult_min = SIZE_MAX;
  for (const auto& br : param.branches) mult_min = std::min(mult_min, br.multiplicity());
  // Images of m^D Omega^1 have t-order >= D * mult_min on every branch.
  const std::size_t P = static_cast<std::size_t>(D) * mult_min;
  const std::size_t ncols = P * param.size();

  // Pullback of x^alpha dx_j to every branch, coefficients of t^0..t^{P-1}.
  std::vector<SparseRow> images;
  images.reserve(omega.size());
  std::vector<std::vector<TruncatedSeries>> phi, dphi;
  for (const auto& br : param.branches) {
    phi.push_back(br.series(P - 1));
    std::vector<TruncatedSeries> d;
    for (const auto& c : br.coords) d.push_back(TruncatedSeries::from_polynomial(c.derivative(), P - 1));
    dphi.push_back(std::move(d));
  }
  for (const auto& lt : omega.monomials()) {
    SparseRow row;
    for (std::size_t b = 0; b < param.size(); ++b) {
      Polynomial xa(C.ring, lt.mon);
      TruncatedSeries s = series_compose(xa, phi[b]) * dphi[b][lt.comp];
      for (std::size_t k = 0; k < P; ++k)
        if (s[k] != 0) row.emplace_back(b * P + k, s[k]);
    }
    images.push_back(std::move(row));
  }

  auto rank_of = [&](int min_degree) {
    RowEchelon ech(ncols);
    for (std::size_t k = 0; k < images.size(); ++k)
      if (omega.monomials()[k].mon.degree() >= min_degree) ech.insert(images[k]);
    return ech.rank();
  };
  const std::size_t full = rank_of(0);
  auto tau_at = [&](int B) { return omega.count_below(B) - (full - rank_of(B)); };

  std::size_t lo = tau_at(bound - 1);
  std::size_t hi = tau_at(bound);
  if (lo != hi) {
    throw PrecisionError("torsion dimension did not stabilize (" + std::to_string(lo) + " at bound " +
                         std::to_string(bound - 1) + ", " + std::to_string(hi) + " at bound " +
                         std::to_string(bound) + ")");
  }
  return hi;
}

}  // namespace hindex
