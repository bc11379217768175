#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace hindex;
using testing_support::P;

TEST_SUITE("oracles") {
  TEST_CASE("truncated colength of monomial ideals") {
    auto R = make_ring({"x", "y"});
    CHECK(oracle::truncated_colength({P("x^2", R), P("y^3", R)}, 12) == 6);
    CHECK(oracle::truncated_colength({P("x", R), P("y", R)}, 12) == 1);
    CHECK(oracle::truncated_colength({P("x^2", R), P("x*y", R), P("y^2", R)}, 12) == 3);
  }

  TEST_CASE("truncated colength sees units") {
    auto R = make_ring({"x", "y"});
    CHECK(oracle::truncated_colength({P("x*(1 + x)", R), P("y - x", R)}, 12) == 1);
    CHECK(oracle::truncated_colength({P("1 + x", R)}, 12) == 0);
  }

  TEST_CASE("graded dimensions of polynomial rings and a hypersurface") {
    auto R = make_ring({"x", "y"});
    auto free = oracle::graded_dimensions(1, {0}, {}, {1, 1}, 4);
    CHECK(free == std::vector<std::int64_t>{1, 2, 3, 4, 5});
    auto cusp = oracle::graded_dimensions(1, {0}, {{P("x^3 - y^2", R)}}, {2, 3}, 6);
    // Q[x,y]/(x^3 - y^2) weighted (2,3) is Q[t^2, t^3]
    CHECK(cusp == std::vector<std::int64_t>{1, 0, 1, 1, 1, 1, 1});
  }
}
