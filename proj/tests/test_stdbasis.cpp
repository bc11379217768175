#include <doctest.h>

#include <numeric>
#include <random>

#include "hindex/dimension.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hindex;
using testing_support::P;
using testing_support::random_polynomial;

namespace {

SubmodulePresentation basis(const std::vector<Polynomial>& gens, MonomialOrder ord) {
  return standard_basis(SubmodulePresentation::ideal(gens.front().ring(), gens, std::move(ord)));
}

Polynomial nf(const Polynomial& f, const SubmodulePresentation& G) { return normal_form(FreeElement{f}, G)[0]; }

}  // namespace

TEST_SUITE("stdbasis") {
  TEST_CASE("normal form examples") {
    auto R = make_ring({"x", "y"});
    auto G = basis({P("x", R)}, MonomialOrder::degrevlex());
    CHECK(nf(P("x^2", R), G).is_zero());
    CHECK(nf(P("x^2 + y", R), G) == P("y", R));
    auto L = basis({P("y - x^2", R)}, MonomialOrder::local());
    CHECK(nf(P("y", R), L) == P("x^2", R));
  }

  TEST_CASE("basis examples") {
    auto R = make_ring({"x", "y"});
    auto cusp = basis({P("x^3 - y^2", R), P("3*x^2 + 2*y", R)}, MonomialOrder::local());
    CHECK(quotient_dimension(cusp) == 3);
    auto single = basis({P("x", R)}, MonomialOrder::local());
    REQUIRE(single.size() == 1);
    CHECK(single.generators()[0][0] == P("x", R));
    // with y the first (largest) variable, y - x has leading term y and xy reduces to x^2
    auto S = make_ring({"y", "x"});
    auto g = basis({P("x*y", S), P("y - x", S)}, MonomialOrder::degrevlex());
    bool has_x2 = false;
    for (const auto& lt : leading_module(g)) has_x2 |= lt.mon == Monomial{0, 2};
    CHECK(has_x2);
  }

  TEST_CASE("leading module") {
    auto R = make_ring({"x", "y"});
    auto G = basis({P("x^2", R), P("y", R)}, MonomialOrder::degrevlex());
    auto lm = leading_module(G);
    CHECK(lm.size() == 2);
    CHECK(std::find(lm.begin(), lm.end(), LeadingTerm{{2, 0}, 0}) != lm.end());
    CHECK(std::find(lm.begin(), lm.end(), LeadingTerm{{0, 1}, 0}) != lm.end());
    SubmodulePresentation empty(R, 1, ModuleOrder(MonomialOrder::local()));
    CHECK(leading_module(standard_basis(empty)).empty());
  }

  TEST_CASE("random ideals: criterion, idempotence, membership") {
    auto R = make_ring({"x", "y", "z"});
    std::mt19937_64 rng(2024);
    for (auto ord : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::local(),
                     MonomialOrder::weighted_local({1, 2, 3})}) {
      for (int k = 0; k < 6; ++k) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_polynomial(R, rng, 3, 3, 1));
        auto G = basis(gens, ord);
        CHECK(G.is_standard_basis());
        CHECK(satisfies_buchberger_criterion(G));
        for (const auto& f : gens) CHECK(nf(f, G).is_zero());
        auto GG = standard_basis(G);
        CHECK(leading_module(GG) == leading_module(G));
        if (!ord.is_local()) {
          auto h = random_polynomial(R, rng, 3, 2);
          auto member = gens[0] * h + gens[1] * gens[2];
          CHECK(nf(member, G).is_zero());
          // normal forms are unique: adding members does not change them
          CHECK(nf(h + member, G) == nf(h, G));
        }
      }
    }
  }

  TEST_CASE("local colength matches the truncated oracle") {
    auto R = make_ring({"x", "y"});
    std::vector<std::vector<std::string>> ideals{
        {"x^3 - y^2", "3*x^2 + 2*y"},
        {"x*y", "y - x"},
        {"x^2 + y^3", "x*y + x^4"},
        {"y^2 - x^4", "x^3 + 2*x*y"},
        {"x^2*y + y^3 + x^5", "x^3 - y^2 + x*y^2"},
    };
    for (const auto& id : ideals) {
      std::vector<Polynomial> gens;
      for (const auto& s : id) gens.push_back(P(s, R));
      auto dim = quotient_dimension(basis(gens, MonomialOrder::local()));
      REQUIRE(dim.has_value());
      CHECK(*dim == oracle::truncated_colength(gens, 12));
    }
  }

  TEST_CASE("colength does not depend on the order") {
    auto R = make_ring({"x", "y"});
    std::vector<Polynomial> gens{P("x^3 - y^2 + x*y^3", R), P("x*y + y^4", R)};
    auto local = quotient_dimension(basis(gens, MonomialOrder::local()));
    CHECK(local == quotient_dimension(basis(gens, MonomialOrder::weighted_local({2, 3}))));
    CHECK(local == quotient_dimension(basis(gens, MonomialOrder::weighted_local({5, 1}))));
    auto global = quotient_dimension(basis(gens, MonomialOrder::degrevlex()));
    CHECK(global == quotient_dimension(basis(gens, MonomialOrder::lex())));
    CHECK(global == quotient_dimension(basis(gens, MonomialOrder::weighted({3, 2}))));
    REQUIRE(global.has_value());
    // the global count includes the zeros away from the origin
    CHECK(*global >= *local);
  }

  TEST_CASE("modules") {
    auto R = make_ring({"x", "y"});
    SubmodulePresentation M(R, 2, ModuleOrder(MonomialOrder::local()));
    M.add(FreeElement{P("x", R), P("y", R)});
    M.add(FreeElement{P("y", R), P("-x", R)});
    M.add(FreeElement{P("x^2", R), Polynomial(R)});
    auto G = standard_basis(M);
    CHECK(satisfies_buchberger_criterion(G));
    for (const auto& g : M.generators()) {
      auto r = normal_form(g, G);
      CHECK(r[0].is_zero());
      CHECK(r[1].is_zero());
    }
    auto dim = quotient_dimension(G);
    REQUIRE(dim.has_value());
    // homogeneous relations: the colength is the total of the graded counts
    auto counts = oracle::graded_dimensions(2, {0, 0}, M.generators(), {1, 1}, 10);
    CHECK(counts.back() == 0);
    CHECK(static_cast<std::int64_t>(*dim) == std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
  }

  TEST_CASE("pair cap") {
    auto R = make_ring({"x", "y", "z"});
    std::vector<Polynomial> gens{P("x^2*y - z", R), P("x*y^2 - x", R), P("x*y*z - 1", R)};
    StdBasisOptions opts;
    opts.pair_cap = 2;
    CHECK_THROWS_AS(standard_basis(SubmodulePresentation::ideal(R, gens, MonomialOrder::degrevlex()), opts),
                    ResourceLimitError);
  }

  TEST_CASE("truncated mode") {
    auto R = make_ring({"x", "y"});
    std::vector<Polynomial> gens{P("x^3 - y^2", R)};
    StdBasisOptions opts;
    opts.degree_bound = 6;
    auto G = standard_basis(SubmodulePresentation::ideal(R, gens, MonomialOrder::local()), opts);
    CHECK(G.degree_bound() == 6);
    CHECK(quotient_dimension(G) == oracle::truncated_colength(gens, 6));
  }
}
