#include <doctest.h>

#include <random>

#include "gdc/ring.hpp"

using namespace gdc;

namespace {

// Independent oracle: a monomial order given by an integer matrix compares
// M*a and M*b lexicographically.
std::strong_ordering matrix_compare(const std::vector<std::vector<long>>& rows, const ExponentVector& a,
                                    const ExponentVector& b) {
  for (const auto& row : rows) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      da += row[i] * a[i];
      db += row[i] * b[i];
    }
    if (da != db) return da <=> db;
  }
  return std::strong_ordering::equal;
}

std::vector<std::vector<long>> grevlex_matrix(std::size_t n) {
  std::vector<std::vector<long>> rows{std::vector<long>(n, 1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<long> row(n, 0);
    row[n - 1 - k] = -1;
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<long>> lex_matrix(std::size_t n) {
  std::vector<std::vector<long>> rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<long> row(n, 0);
    row[k] = 1;
    rows.push_back(row);
  }
  return rows;
}

ExponentVector random_exponent(std::mt19937_64& rng, std::size_t n, int max = 4) {
  std::uniform_int_distribution<int> d(0, max);
  std::vector<int> e(n);
  for (auto& v : e) v = d(rng);
  return ExponentVector(e);
}

std::vector<MonomialOrder> sample_orders() {
  return {MonomialOrder::lex(),
          MonomialOrder::grlex(),
          MonomialOrder::grevlex(),
          MonomialOrder::weight(WeightVector{3, 1, 2, 5}, MonomialOrder::lex()),
          MonomialOrder::weight(WeightVector{0, 1, 0, 2}, MonomialOrder::grevlex()),
          MonomialOrder::block(2, MonomialOrder::lex(), MonomialOrder::grevlex()),
          MonomialOrder::block(1, MonomialOrder::grevlex(), MonomialOrder::weight(WeightVector{1, 2, 1}))};
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(mpz_class(0), mpz_class(-7)).denominator() == 1);
  CHECK(Rational::parse("-12/8").to_string() == "-3/2");
  CHECK(Rational::parse("5").to_string() == "5");
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), ZeroDenominator);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDenominator);
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  auto random_rational = [&] {
    long den = 0;
    while (den == 0) den = d(rng);
    return Rational(mpz_class(d(rng)), mpz_class(den));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = random_rational(), b = random_rational(), c = random_rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    const Rational round = (a + b) - b;
    CHECK(round == a);
    CHECK(round.denominator() > 0);
    CHECK(gcd(round.numerator(), round.denominator()) == 1);
  }
}

TEST_CASE("compare examples") {
  CHECK(compare(MonomialOrder::lex(), {2, 0}, {1, 5}) > 0);
  // y^2 > xz under grevlex
  CHECK(compare(MonomialOrder::grevlex(), {0, 2, 0}, {1, 0, 1}) > 0);
  CHECK(matrix_compare(grevlex_matrix(3), {0, 2, 0}, {1, 0, 1}) > 0);
  for (const auto& order : sample_orders()) {
    CHECK(compare(order, {3, 1, 0, 0}, {3, 1, 0, 0}) == 0);
  }
  CHECK_THROWS_AS(compare(MonomialOrder::lex(), {1, 2}, {1, 2, 3}), DimensionMismatch);
  CHECK_THROWS_AS(MonomialOrder::weight(WeightVector{1, 2}).validate(3), DimensionMismatch);
  CHECK_THROWS_AS(MonomialOrder::block(3, MonomialOrder::lex(), MonomialOrder::lex()).validate(3), InvalidInput);
}

TEST_CASE("grevlex and lex agree with their matrix orders") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    for (int trial = 0; trial < 400; ++trial) {
      auto a = random_exponent(rng, n), b = random_exponent(rng, n);
      CHECK(MonomialOrder::grevlex().compare(a, b) == matrix_compare(grevlex_matrix(n), a, b));
      CHECK(MonomialOrder::lex().compare(a, b) == matrix_compare(lex_matrix(n), a, b));
    }
  }
}

TEST_CASE("order axioms on random triples") {
  std::mt19937_64 rng(3);
  const ExponentVector zero(4);
  for (const auto& order : sample_orders()) {
    order.validate(4);
    for (int trial = 0; trial < 300; ++trial) {
      auto a = random_exponent(rng, 4), b = random_exponent(rng, 4), c = random_exponent(rng, 4);
      const auto ab = order.compare(a, b);
      CHECK(ab == (0 <=> order.compare(b, a)));
      CHECK((ab == 0) == (a == b));
      if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
      CHECK(order.compare(a + c, b + c) == ab);
      if (!a.is_zero()) CHECK(order.compare(zero, a) < 0);
    }
  }
}

TEST_CASE("weight order refines its tiebreak on omega ties") {
  std::mt19937_64 rng(5);
  const WeightVector omega{1, 2, 1};
  for (const auto& tiebreak : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::grlex()}) {
    const auto order = MonomialOrder::weight(omega, tiebreak);
    for (int trial = 0; trial < 500; ++trial) {
      auto a = random_exponent(rng, 3), b = random_exponent(rng, 3);
      if (omega.dot(a) == omega.dot(b)) CHECK(order.compare(a, b) == tiebreak.compare(a, b));
    }
  }
}

TEST_CASE("omega degree of an exponent") {
  CHECK(omega_degree(WeightVector{2, 5}, {1, 1}) == 7);
  CHECK_THROWS_AS(WeightVector({-1, 2}), InvalidInput);
  CHECK_FALSE(WeightVector({0, 2}).is_strictly_positive());
  CHECK_THROWS_AS(WeightVector({0, 2}).require_strictly_positive(), InvalidInput);
}

TEST_CASE("order strings round-trip") {
  for (const auto& order : sample_orders()) CHECK(MonomialOrder::parse(order.to_string()) == order);
  CHECK(MonomialOrder::parse("weight(1,2)").to_string() == "weight(1,2;grevlex)");
  CHECK_THROWS_AS(MonomialOrder::parse("revlex"), ParseError);
}
