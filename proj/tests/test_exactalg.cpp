#include <doctest.h>

#include <random>

#include "hindex/series.hpp"
#include "helpers.hpp"

using namespace hindex;
using testing_support::P;
using testing_support::random_polynomial;

TEST_SUITE("exactalg") {
  TEST_CASE("multiplication examples") {
    auto R = make_ring({"x", "y"});
    CHECK(P("(x+y)*(x-y)", R) == P("x^2 - y^2", R));
    CHECK(Polynomial(R, 1) * P("x^3 - y^2", R) == P("x^3 - y^2", R));
    CHECK(P("x^3 - y^2", R) * P("3*x^2", R) == P("3*x^5 - 3*x^2*y^2", R));
  }

  TEST_CASE("partial derivatives") {
    auto R = make_ring({"x", "y"});
    CHECK(partial_derivative(P("x^3 - y^2", R), 0) == P("3*x^2", R));
    CHECK(partial_derivative(P("x^3 - y^2", R), 1) == P("-2*y", R));
    CHECK(partial_derivative(Polynomial(R, 7), 0).is_zero());
  }

  TEST_CASE("ring axioms on random polynomials") {
    auto R = make_ring({"x", "y", "z"});
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
      auto a = random_polynomial(R, rng, 5, 4);
      auto b = random_polynomial(R, rng, 5, 4);
      auto c = random_polynomial(R, rng, 5, 4);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a * Polynomial(R, 1) == a);
      // Leibniz rule
      CHECK(partial_derivative(a * b, 1) == partial_derivative(a, 1) * b + a * partial_derivative(b, 1));
    }
  }

  TEST_CASE("mixing rings is rejected") {
    auto R = make_ring({"x", "y"});
    auto S = make_ring({"u", "v"});
    CHECK_THROWS_AS(P("x", R) + P("u", S), ContextMismatch);
    CHECK_THROWS_AS(P("x", R) * P("u", S), ContextMismatch);
  }

  TEST_CASE("degree, order and homogeneity") {
    auto R = make_ring({"x", "y"});
    auto f = P("x^3 - y^2", R);
    CHECK(f.degree() == 3);
    CHECK(f.order() == 2);
    std::vector<int> w{2, 3};
    CHECK(f.homogeneous_degree(w) == 6);
    CHECK_FALSE(f.is_homogeneous(std::vector<int>{1, 1}));
    CHECK(Polynomial(R).degree() == -1);
  }

  TEST_CASE("printing parses back") {
    auto R = make_ring({"x", "y"});
    for (auto s : {"3*x^2 - 2*y", "-x + 1/2*y^3", "x*y - 7/3", "0"}) {
      auto p = P(s, R);
      CHECK(P(p.to_string(), R) == p);
    }
  }

  TEST_CASE("series composition examples") {
    auto R = make_ring({"x", "y"});
    const std::size_t D = 5;
    std::vector<TruncatedSeries> cusp{TruncatedSeries::from_polynomial(UPoly({0, 0, 1}), D),
                                      TruncatedSeries::from_polynomial(UPoly({0, 0, 0, 1}), D)};
    CHECK(series_compose(P("y^2 - x^3", R), cusp).is_zero());
    CHECK(series_compose(P("x", R), cusp) == TruncatedSeries({0, 0, 1}, D));
    auto s = series_compose(P("x + y", R), cusp);
    CHECK(s == TruncatedSeries({0, 0, 1, 1}, D));
    CHECK(series_order(s) == 2);
    CHECK(series_order(TruncatedSeries({3, 1}, 4)) == 0);
    CHECK_FALSE(series_order(TruncatedSeries::constant(0, 8)).has_value());
  }

  TEST_CASE("composition is a ring homomorphism") {
    auto R = make_ring({"x", "y"});
    std::mt19937_64 rng(5);
    const std::size_t D = 12;
    std::vector<TruncatedSeries> br{TruncatedSeries({0, 2, -1, 3}, D), TruncatedSeries({0, 0, 1, 0, 5}, D)};
    for (int k = 0; k < 20; ++k) {
      auto a = random_polynomial(R, rng, 4, 4);
      auto b = random_polynomial(R, rng, 4, 4);
      CHECK(series_compose(a + b, br) == series_compose(a, br) + series_compose(b, br));
      CHECK(series_compose(a * b, br) == series_compose(a, br) * series_compose(b, br));
    }
  }

  TEST_CASE("precision bookkeeping") {
    TruncatedSeries a({1, 1}, 3), b({0, 1}, 7);
    CHECK((a * b).precision() == 3);
    CHECK(a.derivative().precision() == 2);
    auto R = make_ring({"x", "y"});
    std::vector<TruncatedSeries> bad{TruncatedSeries({0, 1}, 3), TruncatedSeries({0, 1}, 4)};
    CHECK_THROWS_AS(series_compose(P("x*y", R), bad), PrecisionError);
  }

  TEST_CASE("rational function evaluation") {
    RationalFunction f(UPoly({1, 0, -1}), UPoly::one_minus_power(1));
    CHECK(f.is_polynomial());
    CHECK(ratfun_eval(f, 1) == 2);
    CHECK(ratfun_eval(RationalFunction(UPoly(Rational(13))), 1) == 13);
    CHECK_THROWS_AS(ratfun_eval(RationalFunction(UPoly(Rational(1)), UPoly::one_minus_power(1)), 1), PoleError);
  }

  TEST_CASE("rational function arithmetic and expansion") {
    RationalFunction geo(UPoly(Rational(1)), UPoly::one_minus_power(1));
    auto sq = geo * geo;
    auto c = sq.expand(5);
    for (int k = 0; k < 5; ++k) CHECK(c[k] == k + 1);
    CHECK((geo - geo).numerator().is_zero());
    CHECK((geo.shifted(2)).expand(4) == std::vector<Rational>{0, 0, 1, 1});
  }
}
