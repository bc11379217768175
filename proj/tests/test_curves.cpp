#include <doctest.h>

#include <random>

#include "hindex/curves.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hindex;
using testing_support::P;

namespace {

// Substitutes t -> t * u(t) into every coordinate.
Branch reparametrize(const Branch& b, const UPoly& u) {
  UPoly s = UPoly::monomial(1, 1) * u;
  Branch out;
  for (const auto& c : b.coords) {
    UPoly acc;
    UPoly power(Rational(1));
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      acc += power * c.coeffs()[k];
      power = power * s;
    }
    out.coords.push_back(acc);
  }
  return out;
}

const char* plane_curves[] = {"a1", "a2_cusp", "a3", "e6", "triple_point"};

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("pullback examples") {
    auto R = make_ring({"x", "y"});
    Branch cusp{{UPoly({0, 0, 1}), UPoly({0, 0, 0, 1})}};
    auto dx = pullback_form(testing_support::form(R, {"1", "0"}), cusp, 8);
    CHECK(dx.order == 1);
    CHECK(dx.series[1] == 2);
    auto ab = pullback_form(testing_support::form(R, {"5", "7"}), cusp, 8);
    CHECK(ab.order == 1);
    CHECK(ab.series[1] == 10);
    CHECK(ab.series[2] == 21);
    Branch line{{UPoly(std::vector<Rational>{0, 1}), UPoly()}};
    CHECK_THROWS_AS(pullback_form(testing_support::form(R, {"0", "1"}), line, 16), PrecisionError);
    CHECK_THROWS_AS(pullback_form(testing_support::form(R, {"0", "1"}), line, PrecisionPolicy{}), PrecisionError);
  }

  TEST_CASE("radial index examples") {
    auto R = make_ring({"x", "y"});
    auto dl = testing_support::form(R, {"3", "-4"});
    CHECK(radial_index_curve(dl, *testing_support::corpus("a2_cusp").param).index == 1);
    CHECK(radial_index_curve(dl, *testing_support::corpus("a1").param).index == 1);
    CHECK(radial_index_curve(testing_support::form(R, {"1", "0"}), *testing_support::corpus("smooth_line").param)
              .index == 0);
  }

  TEST_CASE("radial index of the space curves") {
    std::mt19937_64 rng(4);
    for (auto name : {"monomial345", "axes3"}) {
      auto g = testing_support::corpus(name);
      auto w = generic_linear_differential(g.germ.ring, *g.param, rng);
      CHECK(radial_index_curve(w, *g.param).index == 2);
    }
  }

  TEST_CASE("radial index is invariant under reparametrization") {
    std::mt19937_64 rng(8);
    for (auto name : {"a2_cusp", "a3", "e6", "monomial345", "triple_point"}) {
      auto g = testing_support::corpus(name);
      for (int k = 0; k < 4; ++k) {
        OneForm w = random_linear_differential(g.germ.ring, rng);
        // add a quadratic part so the test is not only about linear forms
        w.coefficients[0] += P(g.germ.ring->name(1), g.germ.ring) * Rational(static_cast<long>(rng() % 7) + 1);
        CurveParametrization moved = *g.param;
        for (auto& br : moved.branches) {
          UPoly u({Rational(static_cast<long>(rng() % 5) + 1), Rational(static_cast<long>(rng() % 9) - 4),
                   Rational(static_cast<long>(rng() % 9) - 4)});
          br = reparametrize(br, u);
        }
        check_parametrization(g.germ, moved);
        CHECK(radial_index_curve(w, moved).index == radial_index_curve(w, *g.param).index);
      }
    }
  }

  TEST_CASE("parametrization checks") {
    auto g = testing_support::corpus("a2_cusp");
    CurveParametrization bad{{Branch{{UPoly({0, 0, 1}), UPoly({0, 0, 0, 2})}}}};
    CHECK_THROWS_AS(check_parametrization(g.germ, bad), PreconditionError);
    CurveParametrization off{{Branch{{UPoly({1, 0, 1}), UPoly({0, 0, 0, 1})}}}};
    CHECK_THROWS_AS(check_parametrization(g.germ, off), PreconditionError);
    auto node = testing_support::corpus("a1");
    CurveParametrization twice{{node.param->branches[0], node.param->branches[0]}};
    CHECK_THROWS_AS(check_parametrization(node.germ, twice), PreconditionError);
  }

  TEST_CASE("generic linear differentials are reproducible") {
    auto g = testing_support::corpus("e6");
    std::mt19937_64 a(99), b(99);
    CHECK(generic_linear_differential(g.germ.ring, *g.param, a).coefficients ==
          generic_linear_differential(g.germ.ring, *g.param, b).coefficients);
    std::mt19937_64 c(5);
    for (int k = 0; k < 50; ++k)
      for (const auto& p : random_linear_differential(g.germ.ring, c).coefficients) {
        CHECK(p.is_constant());
        CHECK(abs(p.constant_term()) <= 97);
      }
  }

  TEST_CASE("nu_direct examples") {
    CHECK(nu_direct_curve(testing_support::corpus("a2_cusp").germ) == 2);
    CHECK(nu_direct_curve(testing_support::corpus("a1").germ) == 1);
    CHECK(nu_direct_curve(testing_support::corpus("smooth_line").germ) == 0);
  }

  TEST_CASE("torsion: smooth line and node") {
    auto line = testing_support::corpus("smooth_line");
    CHECK(torsion_tau(line.germ, *line.param) == 0);
    auto node = testing_support::corpus("a1");
    CHECK(torsion_tau(node.germ, *node.param) == 1);
  }

  TEST_CASE("torsion of plane curves equals the Tjurina number") {
    for (auto name : plane_curves) {
      CAPTURE(std::string(name));
      auto g = testing_support::corpus(name);
      const auto& f = g.germ.equations.front();
      auto tjurina = oracle::truncated_colength({f, partial_derivative(f, 0), partial_derivative(f, 1)}, 12);
      CHECK(torsion_tau(g.germ, *g.param) == tjurina);
    }
  }

  TEST_CASE("curve routes need reduced curves") {
    auto g = testing_support::corpus("pinkham");
    CHECK_THROWS_AS(nu_direct_curve(g.germ), PreconditionError);
    auto c = testing_support::corpus("a2_cusp");
    c.germ.reduced = false;
    CHECK_THROWS_AS(nu_direct_curve(c.germ), PreconditionError);
  }
}
