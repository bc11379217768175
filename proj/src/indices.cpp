#include "hindex/indices.hpp"

namespace hindex {

namespace {

std::size_t finite_colength(const SubmodulePresentation& gens, const StdBasisOptions& opts, const char* what) {
  auto dim = quotient_dimension(standard_basis(gens, opts));
  if (!dim) throw NonIsolatedError(std::string(what) + " is infinite: the form does not have an isolated singularity");
  return *dim;
}

void check_form(const VarietyGerm& V, const OneForm& omega) {
  if (omega.size() != V.ambient_dim()) throw PreconditionError("form has the wrong number of coefficients");
  if (omega.is_zero()) throw NonIsolatedError("the zero form has no isolated singularity");
}

}  // namespace

std::size_t egz_index(const VarietyGerm& V, const OneForm& omega, const MonomialOrder& order,
                      const StdBasisOptions& opts) {
  check_form(V, omega);
  auto gens = SubmodulePresentation::ideal(V.ring, minors_ideal(V, omega), order);
  return finite_colength(gens, opts, "colength of the minors ideal");
}

std::size_t hom_index_curve(const VarietyGerm& C, const OneForm& omega, const MonomialOrder& order,
                            const StdBasisOptions& opts) {
  if (C.dimension != 1) throw PreconditionError("curve route needs a germ of dimension 1");
  if (!C.reduced) throw PreconditionError("curve route needs a reduced curve");
  check_form(C, omega);
  auto omega1 = kaehler_presentation(C, 1);
  SubmodulePresentation gens = omega1.submodule(C.ring, ModuleOrder(order));
  gens.add(omega.coefficients);
  return finite_colength(gens, opts, "Omega^1 / omega O");
}

std::optional<int> form_degree(const OneForm& omega, const std::vector<int>& weights) {
  const auto dd = differential_degrees(weights);
  std::optional<int> deg;
  for (std::size_t j = 0; j < omega.size(); ++j) {
    const auto& a = omega.coefficients[j];
    if (a.is_zero()) continue;
    auto d = a.homogeneous_degree(weights);
    if (!d) return std::nullopt;
    int total = *d + dd[j];
    if (deg && *deg != total) return std::nullopt;
    deg = total;
  }
  return deg;
}

GradedIndex hom_index_graded(const VarietyGerm& V, const OneForm& omega, std::size_t prefix_length) {
  V.validate();
  check_form(V, omega);
  const std::vector<int> weights = V.weights ? *V.weights : std::vector<int>(V.ambient_dim(), 1);
  for (const auto& f : V.equations)
    if (!f.is_homogeneous(weights)) throw PreconditionError("equation " + f.to_string() + " is not homogeneous");
  auto deg = form_degree(omega, weights);
  if (!deg) throw PreconditionError("form is not homogeneous for the grading");

  GradedIndex out;
  out.form_degree = *deg;
  const auto n = static_cast<std::size_t>(V.dimension);
  for (std::size_t i = 0; i <= n; ++i) {
    auto pres = kaehler_presentation(V, i);
    auto degrees = pres.generator_degrees(weights);
    GradedPresentation M{pres.rank(), degrees, pres.submodule(V.ring, ModuleOrder(MonomialOrder::weighted(weights)))};
    out.series.push_back(poincare_series(M, weights, prefix_length));
    // Omega^i shifted by (n - i) * deg makes the wedge map degree preserving.
    out.twist.push_back(static_cast<int>(n - i) * *deg);
  }
  Integer chi = alternating_euler(out.series, out.twist);
  out.index = (n % 2 == 0 ? 1 : -1) * chi.get_si();
  return out;
}

std::size_t milnor_hypersurface(const Polynomial& f, const MonomialOrder& order) {
  std::vector<Polynomial> jac;
  for (std::size_t j = 0; j < f.nvars(); ++j) jac.push_back(partial_derivative(f, j));
  auto gens = SubmodulePresentation::ideal(f.ring(), jac, order);
  return finite_colength(gens, {}, "Jacobian colength");
}

NuResult nu_curve(const VarietyGerm& C, const CurveParametrization& param, std::uint64_t seed,
                  const PrecisionPolicy& policy) {
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= 5; ++attempt) {
    OneForm a = generic_linear_differential(C.ring, param, rng, policy);
    OneForm b = generic_linear_differential(C.ring, param, rng, policy);
    long hom_a = static_cast<long>(hom_index_curve(C, a));
    long rad_a = radial_index_curve(a, param, policy).index;
    long hom_b = static_cast<long>(hom_index_curve(C, b));
    long rad_b = radial_index_curve(b, param, policy).index;
    if (hom_a - rad_a == hom_b - rad_b) return {hom_a - rad_a, hom_a, rad_a, std::move(a), attempt};
  }
  throw Error("Ind_hom - Ind_rad differs between draws after 5 attempts; the forms are not generic");
}

void IndexReport::check_consistency() {
  if (egz && hom) consistency["egz_equals_hom"] = *egz == *hom;
  if (nu && hom && radial) consistency["nu_equals_hom_minus_radial"] = *nu == *hom - *radial;
  if (nu && nu_direct) consistency["nu_equals_nu_direct"] = *nu == *nu_direct;
  if (nu && milnor_oracle) consistency["nu_equals_milnor"] = *nu == *milnor_oracle;
}

}  // namespace hindex
