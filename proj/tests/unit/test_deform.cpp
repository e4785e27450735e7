#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "gdc/deform.hpp"
#include "gdc/rational_lp.hpp"

using namespace gdc;
using gdc::testing::random_polynomial;
using gdc::testing::random_weight;

namespace {

Ideal ideal(const Ring& r, std::vector<std::string> gens) { return Ideal(r, gens); }

Ideal random_ideal(std::mt19937_64& rng, const Ring& r, int gens) {
  while (true) {
    std::vector<Polynomial> ps;
    for (int k = 0; k < gens; ++k) ps.push_back(random_polynomial(rng, r, 3, 3, 3));
    Ideal I(r, ps);
    if (!I.is_unit()) return I;
  }
}

Ideal plus_t(const Ideal& I) {
  auto gens = I.generators();
  gens.push_back(Polynomial::variable(I.ring(), I.ring()->size() - 1));
  return Ideal(I.ring(), gens);
}

}  // namespace

TEST_CASE("feasible point of a small system") {
  const std::vector<std::vector<Rational>> rows{{Rational(2), Rational(-1)}, {Rational(-1), Rational(3)}};
  const std::vector<Rational> rhs{Rational(1), Rational(2)};
  const auto y = feasible_point(rows, rhs, 2);
  REQUIRE(y);
  CHECK(Rational(2) * (*y)[0] - (*y)[1] >= Rational(1));
  CHECK(Rational(-1) * (*y)[0] + Rational(3) * (*y)[1] >= Rational(2));
  const std::vector<std::vector<Rational>> bad{{Rational(1)}, {Rational(-1)}};
  CHECK_FALSE(feasible_point(bad, {Rational(2), Rational(-1)}, 1));
}

TEST_CASE("initial ideal examples") {
  const auto r = make_ring({"x", "y"});
  const auto I = ideal(r, {"x^2 - y"});
  CHECK(ideal_equal(initial_ideal_weight(I, WeightVector{1, 1}), ideal(r, {"x^2"})));
  CHECK(ideal_equal(initial_ideal_weight(I, WeightVector{1, 2}), I));
  CHECK(initial_ideal_is_monomial(I, WeightVector{1, 1}));
  CHECK_FALSE(initial_ideal_is_monomial(I, WeightVector{1, 2}));
  const auto H = omega_homogenize_ideal(I, WeightVector{1, 1});
  CHECK(ideal_equal(H, ideal(H.ring(), {"x^2 - y*t"})));
}

TEST_CASE("weight for order examples") {
  const auto r = make_ring({"x", "y"});
  const auto I = ideal(r, {"x^2 - y"});
  const auto w = weight_for_order(I, MonomialOrder::lex());
  CHECK(w.is_strictly_positive());
  CHECK(2 * w[0] > w[1]);
  CHECK(weight_for_order(ideal(r, {"x*y", "y^3"}), MonomialOrder::lex()) == WeightVector{1, 1});

  const auto r6 = make_ring({"x1", "x2", "x3", "x4", "x5", "x6"});
  const auto conca = ideal(r6, {"x1*x5 + x2*x6 + x4^2", "x1*x4 + x3^2 - x4*x5", "x1^2 + x1*x2"});
  const auto wc = weight_for_order(conca, MonomialOrder::lex());
  CHECK(ideal_equal(initial_ideal_weight(conca, wc),
                    Ideal(r6, lt_ideal(conca, MonomialOrder::lex()).to_polynomials())));
  CHECK_THROWS_AS(weight_for_order(ideal(r, {"1"}), MonomialOrder::lex()), InvalidInput);
}

TEST_CASE("weight for order on random ideals") {
  std::mt19937_64 rng(8);
  const auto r = make_ring({"a", "b", "c"});
  for (int trial = 0; trial < 15; ++trial) {
    const auto I = random_ideal(rng, r, 2);
    if (I.is_unit()) continue;
    for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()}) {
      const auto w = weight_for_order(I, order);
      CHECK(ideal_equal(initial_ideal_weight(I, w), Ideal(r, lt_ideal(I, order).to_polynomials())));
    }
  }
}

TEST_CASE("generic initial samples") {
  const auto r2 = make_ring({"x", "y"});
  const auto s = generic_initial_sample(ideal(r2, {"y^2"}), MonomialOrder::grevlex(), 1);
  CHECK(s.stable);
  CHECK(s.initial.to_string() == "(x^2)");
  CHECK_THROWS_AS(generic_initial_sample(ideal(r2, {"x^2 - y"}), MonomialOrder::grevlex(), 1), InvalidInput);
}

TEST_CASE("homogenization identities on random ideals") {
  std::mt19937_64 rng(31);
  const auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    const auto I = random_ideal(rng, r, 2);
    const auto w = random_weight(rng, 3, 1, 4);
    const auto H = omega_homogenize_ideal(I, w);
    CAPTURE(I.to_string());
    CAPTURE(w.to_string());
    CHECK(ideal_equal(dehomogenize_ideal(H), I));
    CHECK(ideal_equal(H, omega_homogenize_ideal_by_saturation(I, w)));
    const auto t = Polynomial::variable(H.ring(), 3);
    CHECK(ideal_equal(saturate(H, t), H));
    CHECK(ideal_equal(plus_t(H), plus_t(initial_ideal_weight(I, w).extend(H.ring(), 0))));
    CHECK(dimension(H) == dimension(I) + 1);
  }
}

TEST_CASE("homogenization commutes with intersection and detects equality") {
  std::mt19937_64 rng(47);
  const auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 12; ++trial) {
    const auto I = random_ideal(rng, r, 2), J = random_ideal(rng, r, 2);
    const auto w = random_weight(rng, 3, 1, 3);
    CHECK(ideal_equal(omega_homogenize_ideal(intersect(I, J), w),
                      intersect(omega_homogenize_ideal(I, w), omega_homogenize_ideal(J, w))));
    CHECK(ideal_equal(I, J) == ideal_equal(omega_homogenize_ideal(I, w), omega_homogenize_ideal(J, w)));
    auto gens = I.generators();
    gens.push_back(gens[0] * random_polynomial(rng, r, 2, 1) + gens[1]);
    const Ideal same(r, gens);
    CHECK(ideal_equal(omega_homogenize_ideal(I, w), omega_homogenize_ideal(same, w)));
  }
}

TEST_CASE("homogenization preserves radical membership") {
  std::mt19937_64 rng(53);
  const auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 12; ++trial) {
    const auto f = random_polynomial(rng, r, 2, 2, 3), g = random_polynomial(rng, r, 3, 2, 3);
    const Ideal I(r, {f * f, g});
    const auto w = random_weight(rng, 3, 1, 3);
    REQUIRE(radical_membership(I, f));
    CHECK(radical_membership(omega_homogenize_ideal(I, w), omega_homogenize(f, w)));
  }
}

TEST_CASE("generic initial sample of the Conca ideal") {
  const auto r6 = make_ring({"x1", "x2", "x3", "x4", "x5", "x6"});
  const auto conca = ideal(r6, {"x1*x5 + x2*x6 + x4^2", "x1*x4 + x3^2 - x4*x5", "x1^2 + x1*x2"});
  const auto s = generic_initial_sample(conca, MonomialOrder::grevlex(), 2024);
  CHECK(s.stable);
  CHECK(radical_monomial(s.initial).to_string() == "(x3, x2, x1)");
}
