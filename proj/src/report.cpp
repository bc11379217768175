#include "hindex/report.hpp"

#include <chrono>
#include <random>

namespace hindex {

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw ResourceLimitError("integer " + z.get_str() + " does not fit the report");
  return z.get_si();
}

Json rationals(const UPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) {
    if (is_integer(c)) {
      a.push_back(to_long(c.get_num()));
    } else {
      a.push_back(to_string(c));
    }
  }
  return a;
}

class Runner {
 public:
  Runner(const GermFile& g, const RunOptions& opts)
      : g_(g), V_(g.germ), opts_(opts), order_(MonomialOrder::parse(opts.order)), rng_(opts.seed) {
    policy_.start = std::max<std::size_t>(opts.precision, 1);
    policy_.max = std::max<std::size_t>(policy_.start, 256);
    rep_.germ = g.name;
    rep_.seed = opts.seed;
  }

  Json run(const std::string& command) {
    if (command == "egz") {
      egz();
    } else if (command == "hom") {
      hom();
    } else if (command == "radial") {
      radial();
    } else if (command == "nu") {
      nu();
    } else if (command == "hilbert") {
      hilbert();
    } else if (command == "milnor") {
      milnor();
    } else if (command == "tau") {
      tau();
    } else if (command == "all") {
      all();
    } else {
      throw PreconditionError("unknown command '" + command + "'");
    }
    if (opts_.minimize) minimize();
    rep_.check_consistency();
    return to_json(command);
  }

 private:
  bool is_curve() const { return V_.dimension == 1 && V_.reduced; }
  bool is_hypersurface() const { return V_.equations.size() == 1 && V_.dimension + 1 == static_cast<int>(V_.ambient_dim()); }
  std::vector<int> weights() const { return V_.weights ? *V_.weights : std::vector<int>(V_.ambient_dim(), 1); }
  bool graded_form() {
    for (const auto& f : V_.equations)
      if (!f.is_homogeneous(weights())) return false;
    return form_degree(form(), weights()).has_value();
  }

  const OneForm& form() {
    if (!form_) {
      if (g_.form) {
        form_ = *g_.form;
      } else {
        form_ = g_.param ? generic_linear_differential(V_.ring, *g_.param, rng_, policy_)
                         : random_linear_differential(V_.ring, rng_);
        form_generated_ = true;
      }
      rep_.form = form_->to_string();
    }
    return *form_;
  }

  const CurveParametrization& param() const {
    if (!g_.param) throw PreconditionError("this command needs a [param] section");
    return *g_.param;
  }

  void egz() {
    if (!V_.icis) throw PreconditionError("the EGZ index needs a germ declared icis");
    rep_.egz = static_cast<long>(egz_index(V_, form(), order_));
    rep_.routes["egz"] = "colength of equations + maximal minors, order " + order_.to_string();
  }

  void hom() {
    if (is_curve()) {
      rep_.hom = static_cast<long>(hom_index_curve(V_, form(), order_));
      rep_.routes["hom"] = "curve: dim Omega^1 / O omega, order " + order_.to_string();
      return;
    }
    if (!graded_form()) {
      throw PreconditionError("hom needs a reduced curve or a weighted homogeneous germ and form");
    }
    GradedIndex gi = hom_index_graded(V_, form(), opts_.terms);
    rep_.hom = gi.index;
    rep_.routes["hom"] = "graded: alternating Poincare series of Omega^0..Omega^n";
    details_["hom_graded"] = Json{{"form_degree", gi.form_degree}, {"twist", gi.twist}};
  }

  void radial() {
    RadialIndex r = radial_index_curve(form(), param(), policy_);
    rep_.radial = r.index;
    rep_.routes["radial"] = "sum of branch pullback orders + (branches - 1)";
    Json orders = Json::array();
    for (auto o : r.orders) orders.push_back(o);
    details_["branch_orders"] = orders;
  }

  void nu() {
    if (opts_.radial) {
      if (!rep_.hom) hom();
      rep_.nu = *rep_.hom - *opts_.radial;
      rep_.routes["nu"] = "user-supplied radial";
      details_["user_radial"] = *opts_.radial;
      return;
    }
    if (!g_.param || !is_curve()) {
      throw PreconditionError("nu needs a parametrized reduced curve, or --radial for other germs");
    }
    NuResult r = nu_curve(V_, *g_.param, opts_.seed, policy_);
    rep_.nu = r.nu;
    rep_.routes["nu"] = "curve: hom - radial of a seeded generic dl, confirmed by a second draw";
    details_["nu_witness"] =
        Json{{"form", r.form.to_string()}, {"hom", r.hom}, {"radial", r.radial}, {"attempts", r.attempts}};
  }

  void nu_direct() {
    rep_.nu_direct = static_cast<long>(nu_direct_curve(V_, opts_.bound));
    rep_.routes["nu_direct"] = "dim Omega^1 / dO, truncated at bound " + std::to_string(opts_.bound);
  }

  void tau() {
    if (!is_curve()) throw PreconditionError("tau needs a reduced curve");
    rep_.tau = static_cast<long>(torsion_tau(V_, param(), std::min(opts_.bound, 8)));
    rep_.routes["tau"] = "kernel of the pullback to the normalization";
  }

  void milnor() {
    if (!is_hypersurface()) throw PreconditionError("milnor needs a hypersurface germ (one equation)");
    rep_.milnor_oracle = static_cast<long>(milnor_hypersurface(V_.equations.front(), order_));
    rep_.routes["milnor_oracle"] = "Jacobian colength, order " + order_.to_string();
  }

  void hilbert() {
    V_.validate();
    const auto w = weights();
    const auto n = static_cast<std::size_t>(V_.dimension);
    std::vector<std::size_t> ps;
    if (opts_.module) {
      if (*opts_.module > n) throw PreconditionError("module index exceeds the dimension");
      ps.push_back(*opts_.module);
    } else {
      for (std::size_t p = 0; p <= n; ++p) ps.push_back(p);
    }
    Json modules = Json::array();
    std::vector<PoincareSeriesResult> all;
    for (auto p : ps) {
      auto pres = kaehler_presentation(V_, p);
      GradedPresentation M{pres.rank(), pres.generator_degrees(w),
                           pres.submodule(V_.ring, ModuleOrder(MonomialOrder::weighted(w)))};
      auto res = poincare_series(M, w, opts_.terms);
      Json prefix = Json::array();
      for (const auto& c : res.prefix) prefix.push_back(to_long(c));
      modules.push_back(Json{{"p", p},
                             {"rank", pres.rank()},
                             {"series", res.series.to_string()},
                             {"numerator", rationals(res.series.numerator())},
                             {"denominator", rationals(res.series.denominator())},
                             {"prefix", prefix}});
      all.push_back(std::move(res));
    }
    Json h{{"weights", w}, {"modules", modules}};
    if (!opts_.module) {
      // d has degree -min(w), so Omega^i is shifted by i * min(w) in the de Rham complex.
      const int wmin = *std::min_element(w.begin(), w.end());
      std::vector<int> zero(all.size(), 0), de_rham;
      for (std::size_t i = 0; i < all.size(); ++i) de_rham.push_back(static_cast<int>(i) * wmin);
      const long chi = to_long(alternating_euler(all, de_rham));
      h["alternating_euler"] = to_long(alternating_euler(all, zero));
      h["de_rham_euler"] = chi;
      h["de_rham_reduced_euler"] = (n % 2 == 0 ? 1 : -1) * (chi - 1);
    }
    details_["hilbert"] = h;
  }

  void minimize() {
    const OneForm base = form();
    std::optional<long> best;
    const Rational eps(1, 1000);
    for (int k = 0; k < 7; ++k) {
      OneForm dl = random_linear_differential(V_.ring, rng_);
      OneForm w = base;
      for (std::size_t j = 0; j < w.size(); ++j) w.coefficients[j] += dl.coefficients[j] * eps;
      long v = 0;
      try {
        if (is_curve()) {
          v = static_cast<long>(hom_index_curve(V_, w, MonomialOrder::local()));
        } else if (V_.icis) {
          v = static_cast<long>(egz_index(V_, w, MonomialOrder::local()));
        } else {
          throw PreconditionError("--minimize needs a reduced curve or an icis");
        }
      } catch (const NonIsolatedError&) {
        continue;
      }
      if (!best || v < *best) best = v;
    }
    if (!best) throw NonIsolatedError("no perturbation of the form had an isolated zero");
    rep_.minimal_hom = *best;
    rep_.routes["minimal_hom"] = "heuristic: min over 7 seeded perturbations omega + dl/1000";
  }

  void all() {
    if (V_.icis) egz();
    if (is_curve() || graded_form()) hom();
    if (g_.param) radial();
    if ((g_.param && is_curve()) || opts_.radial) nu();
    if (is_curve()) nu_direct();
    if (g_.param && is_curve()) tau();
    if (is_hypersurface()) milnor();
  }

  Json to_json(const std::string& command) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["germ"] = rep_.germ;
    j["order"] = order_.to_string();
    j["seed"] = rep_.seed;
    if (form_) {
      j["form"] = rep_.form;
      j["form_source"] = form_generated_ ? "seeded generic dl" : "file";
    }
    auto put = [&](const char* key, const std::optional<long>& v) {
      if (v) j[key] = *v;
    };
    put("egz", rep_.egz);
    put("hom", rep_.hom);
    put("radial", rep_.radial);
    put("nu", rep_.nu);
    put("nu_direct", rep_.nu_direct);
    put("milnor_oracle", rep_.milnor_oracle);
    put("tau", rep_.tau);
    put("minimal_hom", rep_.minimal_hom);
    j["routes"] = Json(rep_.routes);
    j["consistency"] = Json(rep_.consistency);
    for (auto& [k, v] : details_.items()) j[k] = v;
    return j;
  }

  const GermFile& g_;
  VarietyGerm V_;
  RunOptions opts_;
  MonomialOrder order_;
  PrecisionPolicy policy_;
  std::mt19937_64 rng_;
  std::optional<OneForm> form_;
  bool form_generated_ = false;
  IndexReport rep_;
  Json details_ = Json::object();
};

}  // namespace

Json run(const std::string& command, const GermFile& g, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Json j = Runner(g, opts).run(command);
  if (opts.timing) {
    j["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return j;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const ContextMismatch*>(&e) ||
      dynamic_cast<const PoleError*>(&e))
    return 3;
  if (dynamic_cast<const NonIsolatedError*>(&e)) return 4;
  if (dynamic_cast<const ResourceLimitError*>(&e)) return 5;
  if (dynamic_cast<const PrecisionError*>(&e)) return 6;
  return 1;
}

std::string error_kind(const std::exception& e) {
  switch (exit_code(e)) {
    case 2: return "parse";
    case 3: return "precondition";
    case 4: return "non_isolated";
    case 5: return "resource_limit";
    case 6: return "precision";
    default: return "internal";
  }
}

Json error_report(const std::exception& e) {
  Json err{{"kind", error_kind(e)}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = pe->line();
    err["column"] = pe->column();
  }
  return Json{{"schema", kReportSchema}, {"error", err}};
}

}  // namespace hindex
