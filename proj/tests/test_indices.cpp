#include <doctest.h>

#include <random>

#include "hindex/indices.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hindex;
using testing_support::P;

namespace {

const char* plane_curves[] = {"a1", "a2_cusp", "a3", "e6", "triple_point"};
const char* parametrized[] = {"a1", "a2_cusp", "a3", "e6", "triple_point", "axes3", "monomial345", "smooth_line"};

// f(x + point)
Polynomial translate(const Polynomial& f, const std::vector<Rational>& point) {
  const auto& R = f.ring();
  Polynomial out(R);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t(R, c);
    for (std::size_t j = 0; j < R->size(); ++j)
      t = t * (Polynomial::variable(R, j) + Polynomial(R, point[j])).pow(static_cast<unsigned>(m[j]));
    out += t;
  }
  return out;
}

// Seeded forms mixing dl with higher-order coefficients.
OneForm seeded_form(const RingPtr& R, const CurveParametrization& param, std::mt19937_64& rng, int k) {
  OneForm w = generic_linear_differential(R, param, rng);
  if (k % 2 == 1) {
    for (std::size_t j = 0; j < R->size(); ++j) {
      auto xj = Polynomial::variable(R, (j + 1) % R->size());
      w.coefficients[j] += xj * xj * Rational(static_cast<long>(rng() % 11) - 5);
    }
  }
  return w;
}

}  // namespace

TEST_SUITE("indices") {
  TEST_CASE("egz examples") {
    auto R = make_ring({"x", "y"});
    CHECK(egz_index(testing_support::corpus("a2_cusp").germ, testing_support::form(R, {"1", "1"})) == 3);
    CHECK(egz_index(testing_support::corpus("a1").germ, testing_support::form(R, {"1", "1"})) == 2);
    VarietyGerm plane;
    plane.ring = R;
    plane.dimension = 2;
    plane.icis = true;
    plane.reduced = true;
    CHECK(egz_index(plane, testing_support::form(R, {"x", "y"})) == 1);
    CHECK_THROWS_AS(egz_index(plane, testing_support::form(R, {"x", "0"})), NonIsolatedError);
  }

  TEST_CASE("hom examples") {
    auto R = make_ring({"x", "y"});
    CHECK(hom_index_curve(testing_support::corpus("a2_cusp").germ, testing_support::form(R, {"3", "5"})) == 3);
    CHECK(hom_index_curve(testing_support::corpus("a1").germ, testing_support::form(R, {"3", "5"})) == 2);
    CHECK(hom_index_curve(testing_support::corpus("smooth_line").germ, testing_support::form(R, {"x", "0"})) == 1);
    CHECK_THROWS_AS(hom_index_curve(testing_support::corpus("smooth_line").germ, testing_support::form(R, {"0", "1"})),
                    NonIsolatedError);
  }

  TEST_CASE("egz = hom on plane curves, also against the brute-force oracle") {
    std::mt19937_64 rng(31);
    for (auto name : plane_curves) {
      auto g = testing_support::corpus(name);
      for (int k = 0; k < 5; ++k) {
        auto w = seeded_form(g.germ.ring, *g.param, rng, k);
        auto egz = egz_index(g.germ, w);
        CHECK(egz == hom_index_curve(g.germ, w));
        CHECK(egz == oracle::truncated_colength(minors_ideal(g.germ, w), 12));
      }
    }
  }

  TEST_CASE("graded index examples") {
    auto g = testing_support::corpus("pinkham");
    CHECK(hom_index_graded(g.germ, *g.form).index == 13);
    VarietyGerm line;
    line.ring = make_ring({"x"});
    line.dimension = 1;
    line.icis = true;
    line.reduced = true;
    CHECK(hom_index_graded(line, testing_support::form(line.ring, {"1"})).index == 0);
  }

  TEST_CASE("graded route equals curve route") {
    auto g = testing_support::corpus("a2_cusp");
    const auto& R = g.germ.ring;
    auto dxy = exterior_derivative(P("x*y", R));
    CHECK(form_degree(dxy, {2, 3}) == 3);
    CHECK(hom_index_graded(g.germ, dxy).index == static_cast<long>(hom_index_curve(g.germ, dxy)));
    // d of a weighted homogeneous function is homogeneous
    std::vector<std::pair<const char*, const char*>> cases{
        {"e6", "x*y"}, {"a3", "x^2 + 3*y"}, {"a1", "x + 2*y"}, {"monomial345", "x*y"},
        {"triple_point", "x - 3*y"}, {"axes3", "x + 2*y + 3*z"}};
    for (auto [name, h] : cases) {
      auto c = testing_support::corpus(name);
      CAPTURE(std::string(name));
      auto w = exterior_derivative(P(h, c.germ.ring));
      CHECK(hom_index_graded(c.germ, w).index == static_cast<long>(hom_index_curve(c.germ, w)));
    }
  }

  TEST_CASE("non-homogeneous forms are refused by the graded route") {
    auto g = testing_support::corpus("a2_cusp");
    CHECK_THROWS_AS(hom_index_graded(g.germ, testing_support::form(g.germ.ring, {"1", "x"})), PreconditionError);
  }

  TEST_CASE("milnor examples") {
    auto R = make_ring({"x", "y"});
    CHECK(milnor_hypersurface(P("x^3 - y^2", R)) == 2);
    CHECK(milnor_hypersurface(P("x*y", R)) == 1);
    CHECK(milnor_hypersurface(P("x^3 + y^4", R)) == 6);
  }

  TEST_CASE("nu examples") {
    CHECK(nu_curve(testing_support::corpus("a2_cusp").germ, *testing_support::corpus("a2_cusp").param, 1).nu == 2);
    CHECK(nu_curve(testing_support::corpus("a1").germ, *testing_support::corpus("a1").param, 1).nu == 1);
    auto line = testing_support::corpus("smooth_line");
    CHECK(nu_curve(line.germ, *line.param, 1).nu == 0);
  }

  TEST_CASE("nu equals milnor on plane curves") {
    for (auto name : plane_curves) {
      auto g = testing_support::corpus(name);
      const auto& f = g.germ.equations.front();
      auto mu = milnor_hypersurface(f);
      CHECK(nu_curve(g.germ, *g.param, 7).nu == static_cast<long>(mu));
      CHECK(mu == oracle::truncated_colength({partial_derivative(f, 0), partial_derivative(f, 1)}, 12));
    }
  }

  TEST_CASE("hom - radial does not depend on the form") {
    std::mt19937_64 rng(77);
    for (auto name : parametrized) {
      CAPTURE(std::string(name));
      auto g = testing_support::corpus(name);
      std::optional<long> nu;
      for (int k = 0; k < 6; ++k) {
        auto w = seeded_form(g.germ.ring, *g.param, rng, k);
        long v = static_cast<long>(hom_index_curve(g.germ, w)) - radial_index_curve(w, *g.param).index;
        if (nu) CHECK(v == *nu);
        nu = v;
      }
      CHECK(*nu == nu_direct_curve(g.germ));
    }
  }

  TEST_CASE("conservation of number on the cusp") {
    auto g = testing_support::corpus("a2_cusp");
    const auto& R = g.germ.ring;
    const Rational eps(1, 1000);
    auto w = testing_support::form(R, {"0", "1"});
    auto w_eps = testing_support::form(R, {"1/1000", "1"});
    auto local = egz_index(g.germ, w);
    auto local_eps = egz_index(g.germ, w_eps);
    CHECK(local == 4);
    CHECK(local_eps == 3);
    // the minors ideal of dy is supported at 0 only; its global colength is the local one
    CHECK(egz_index(g.germ, w, MonomialOrder::degrevlex()) == local);
    CHECK(egz_index(g.germ, w_eps, MonomialOrder::degrevlex()) == local);
    // the zero split off sits at x = 4 eps^2 / 9, y = -3 x^2 / (2 eps), with index 1
    const Rational px = 4 * eps * eps / 9;
    const Rational py = -3 * px * px / (2 * eps);
    std::vector<Polynomial> moved;
    for (const auto& f : minors_ideal(g.germ, w_eps)) moved.push_back(translate(f, {px, py}));
    auto away = quotient_dimension(standard_basis(SubmodulePresentation::ideal(R, moved, MonomialOrder::local())));
    CHECK(away == 1);
    CHECK(local_eps + *away == local);
  }

  TEST_CASE("index report consistency flags") {
    IndexReport r;
    r.egz = 3;
    r.hom = 3;
    r.radial = 1;
    r.nu = 2;
    r.milnor_oracle = 2;
    r.check_consistency();
    CHECK(r.consistency.at("egz_equals_hom"));
    CHECK(r.consistency.at("nu_equals_hom_minus_radial"));
    CHECK(r.consistency.at("nu_equals_milnor"));
    r.nu = 5;
    r.check_consistency();
    CHECK_FALSE(r.consistency.at("nu_equals_milnor"));
  }
}
