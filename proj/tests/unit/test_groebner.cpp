#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "gdc/groebner.hpp"

using namespace gdc;
using gdc::testing::check_basis;
using gdc::testing::random_polynomial;

namespace {

Ideal ideal(const Ring& r, std::vector<std::string> gens) { return Ideal(r, gens); }

std::vector<std::string> strings(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.elements()) out.push_back(format_polynomial(g, gb.order()));
  return out;
}

}  // namespace

TEST_CASE("normal form example") {
  const auto r = make_ring({"x", "y"});
  const auto I = ideal(r, {"x^2 - y"});
  CHECK(normal_form(parse_polynomial("x^3", r), I.basis(MonomialOrder::lex())) == parse_polynomial("x*y", r));
}

TEST_CASE("lex basis of a curve") {
  const auto r = make_ring({"x", "y", "z"});
  const auto I = ideal(r, {"x^2 - y", "x^3 - z"});
  const auto& gb = I.basis(MonomialOrder::lex());
  CHECK(strings(gb) == std::vector<std::string>{"x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"});
  CHECK(check_basis(I.generators(), gb).ok());
  CHECK(lt_ideal(I, MonomialOrder::lex()).to_string() == "(y^3, x*z, x*y, x^2)");
  CHECK(ideal_membership(parse_polynomial("y^3 - z^2", r), I));
  CHECK_FALSE(ideal_membership(parse_polynomial("y - z", r), I));
}

TEST_CASE("ideal operations") {
  const auto r = make_ring({"x", "y", "z"});
  CHECK(ideal_equal(ideal(r, {"x^2 - y", "x^3 - z"}), ideal(r, {"x^2 - y", "x*y - z"})));
  CHECK(ideal_contains(ideal(r, {"x", "y"}), ideal(r, {"x*y", "x^2 + y"})));
  const auto E = eliminate(ideal(r, {"x^2 - y", "x^3 - z"}), 1);
  CHECK(ideal_equal(E, ideal(r, {"z^2 - y^3"})));
  CHECK(ideal_equal(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  const auto rt = make_ring({"t", "x", "y"});
  CHECK(ideal_equal(saturate(ideal(rt, {"t*x", "t*y"}), parse_polynomial("t", rt)), ideal(rt, {"x", "y"})));
  CHECK(radical_membership(ideal(r, {"x^2"}), parse_polynomial("x", r)));
  CHECK_FALSE(radical_membership(ideal(r, {"x^2"}), parse_polynomial("y", r)));
  CHECK(ideal(r, {"x", "x + 1"}).is_unit());
  CHECK(Ideal(r).basis(MonomialOrder::grevlex()).is_zero());
}

TEST_CASE("dimensions") {
  const auto r3 = make_ring({"x", "y", "z"});
  CHECK(dimension(ideal(r3, {"x*y", "x*z"})) == 2);
  CHECK(dimension(ideal(r3, {"1"})) == -1);
  CHECK(dimension(Ideal(r3)) == 3);
  const auto r6 = make_ring({"x1", "x2", "x3", "x4", "x5", "x6"});
  CHECK(dimension(ideal(r6, {"x1*x5 + x2*x6 + x4^2", "x1*x4 + x3^2 - x4*x5", "x1^2 + x1*x2"})) == 3);
  const auto r4 = make_ring({"x", "y", "z", "w"});
  CHECK(dimension(ideal(r4, {"x*z - y^2", "x*w - y*z", "y*w - z^2"})) == 2);
}

TEST_CASE("step budget is enforced") {
  const auto r = make_ring({"x1", "x2", "x3", "x4", "x5", "x6"});
  const auto I = ideal(r, {"x1*x5 + x2*x6 + x4^2", "x1*x4 + x3^2 - x4*x5", "x1^2 + x1*x2"});
  GroebnerOptions opts;
  opts.step_budget = 3;
  CHECK_THROWS_AS(buchberger(I, MonomialOrder::lex(), opts), BudgetExceeded);
}

TEST_CASE("random ideals: oracle, seeded uniqueness, order independence of dimension") {
  std::mt19937_64 rng(1234);
  const auto r = make_ring({"a", "b", "c", "d"});
  const std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(),
                                          MonomialOrder::weight(WeightVector{2, 1, 3, 1})};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(rng, r, 3, 2, 3));
    const Ideal I(r, gens);
    int dim = -2;
    for (const auto& order : orders) {
      const auto& gb = I.basis(order);
      CHECK(check_basis(gens, gb).ok());
      GroebnerOptions seeded;
      seeded.selection_seed = 77 + trial;
      CHECK(buchberger(I, order, seeded) == gb);
      const int d = gb.is_unit() ? -1 : 4 - height_monomial(MonomialIdeal(r, gb.leading_monomials()));
      if (dim == -2) dim = d;
      CHECK(d == dim);
    }
    CHECK(dimension(I) == dim);
  }
}
