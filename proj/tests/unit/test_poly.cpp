#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "gdc/errors.hpp"
#include "gdc/poly.hpp"

using namespace gdc;
using gdc::testing::random_invertible_matrix;
using gdc::testing::random_polynomial;
using gdc::testing::random_weight;

namespace {

Ring xyz() { return make_ring({"x", "y", "z"}); }

Polynomial P(const char* s, const Ring& r) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("parse examples") {
  const auto r6 = make_ring({"x1", "x2", "x3", "x4", "x5", "x6"});
  const auto f = P("x1*x5 + x2*x6 + x4^2", r6);
  CHECK(f.size() == 3);
  CHECK(f.is_homogeneous());
  CHECK(P("0", r6).is_zero());

  const auto r = make_ring({"x", "y"});
  const auto g = P("3/2*x^2*y - y + 1", r);
  CHECK(g.size() == 3);
  CHECK(format_polynomial(g) == "3/2*x^2*y - y + 1");
  CHECK(P("-x + 2/4*y", r).to_string() == "-x + 1/2*y");
  CHECK(P("x*x*y", r) == P("x^2*y", r));
  CHECK(P("x - x", r).is_zero());
}

TEST_CASE("parse errors") {
  const auto r = make_ring({"x", "y"});
  CHECK_THROWS_AS(P("x + q", r), UnknownVariable);
  CHECK_THROWS_AS(P("1/0*x", r), ZeroDenominator);
  CHECK_THROWS_AS(P("x +* y", r), ParseError);
  CHECK_THROWS_AS(P("x^", r), ParseError);
  try {
    P("x + ) y", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("arithmetic examples") {
  const auto r = xyz();
  CHECK(P("x + y", r) * P("x - y", r) == P("x^2 - y^2", r));
  CHECK(P("x + 1", r).pow(3) == P("x^3 + 3*x^2 + 3*x + 1", r));
  CHECK(P("x", r).pow(0) == Polynomial::constant(r, Rational(1)));
  CHECK(scale(Rational(mpz_class(1), mpz_class(2)), P("2*x + 4", r)) == P("x + 2", r));
  CHECK_THROWS_AS(P("x", r) + P("x", make_ring({"x", "y", "w"})), ContextMismatch);
}

TEST_CASE("leading terms under several orders") {
  const auto r = xyz();
  const auto f = P("x*z - y^2", r);
  CHECK(leading_term(f, MonomialOrder::grevlex()).monomial == ExponentVector{0, 2, 0});
  CHECK(leading_term(f, MonomialOrder::grevlex()).coefficient == Rational(-1));
  CHECK(leading_term(f, MonomialOrder::lex()).monomial == ExponentVector{1, 0, 1});
  CHECK(leading_term(f, MonomialOrder::grlex()).monomial == ExponentVector{1, 0, 1});
  CHECK(P("-y^2 + x*z", r).monic(MonomialOrder::grevlex()) == P("y^2 - x*z", r));
  CHECK_THROWS_AS(leading_term(Polynomial(r), MonomialOrder::lex()), ZeroPolynomial);
}

TEST_CASE("initial forms and homogenization") {
  const auto r = make_ring({"x", "y"});
  const WeightVector w{1, 2};
  const auto f = P("x^2 + y + x + 1", r);
  CHECK(omega_degree(w, f) == 2);
  CHECK(initial_form(f, w) == P("x^2 + y", r));
  const auto F = omega_homogenize(f, w);
  CHECK(F.ring()->has_t());
  CHECK(F == P("x^2 + y + x*t + t^2", F.ring()));
  CHECK(F.is_homogeneous(WeightVector{1, 2, 1}));
  CHECK(dehomogenize(F) == f);
}

TEST_CASE("linear substitution") {
  const auto r = make_ring({"x", "y"});
  const RationalMatrix m{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK(substitute_linear(P("x*y", r), m) == P("x*y + y^2", r));
  CHECK(substitute_linear(substitute_linear(P("x^2 - 3*y", r), m), inverse(m)) == P("x^2 - 3*y", r));
  const RationalMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK_THROWS_AS(substitute_linear(P("x", r), singular), SingularMatrix);
  CHECK_THROWS_AS(inverse(singular), SingularMatrix);
}

TEST_CASE("polynomial properties on random inputs") {
  std::mt19937_64 rng(21);
  const auto r = make_ring({"a", "b", "c", "d"});
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = random_polynomial(rng, r, 5, 4), g = random_polynomial(rng, r, 5, 4),
               h = random_polynomial(rng, r, 3, 3);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f + g) - g == f);
    CHECK(parse_polynomial(format_polynomial(f), r) == f);
    CHECK(parse_polynomial(format_polynomial(f, MonomialOrder::lex()), r) == f);

    const auto w = random_weight(rng, 4, 1, 6);
    CHECK(initial_form(f * g, w) == initial_form(f, w) * initial_form(g, w));
    CHECK(omega_degree(w, f * g) == omega_degree(w, f) + omega_degree(w, g));
    const auto Ff = omega_homogenize(f, w), Fg = omega_homogenize(g, w);
    CHECK(omega_homogenize(f * g, w) == Ff * Fg);
    CHECK(dehomogenize(Ff) == f);

    const auto m = random_invertible_matrix(rng, 4, 2);
    CHECK(substitute_linear(f * g, m) == substitute_linear(f, m) * substitute_linear(g, m));
    CHECK(substitute_linear(substitute_linear(f, m), inverse(m)) == f);
  }
}

TEST_CASE("ring embeddings") {
  const auto r = make_ring({"x", "y"});
  const auto big = ring_with_leading(r, 2);
  CHECK(big->size() == 4);
  const auto f = P("x*y - 1", r);
  CHECK(f.extend(big, 2).restrict(r, 2) == f);
  CHECK_THROWS_AS(Polynomial::variable(big, 0).restrict(r, 2), InvalidInput);
  CHECK_THROWS_AS(ring_with_t(make_ring({"x", "t"})), InvalidInput);
  CHECK_THROWS_AS(make_ring({"x", "x"}), InvalidInput);
}
