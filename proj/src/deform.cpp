#include "gdc/deform.hpp"

#include <limits>
#include <random>

#include "gdc/errors.hpp"
#include "gdc/rational_lp.hpp"

namespace gdc {

namespace {

MonomialOrder refined(const WeightVector& omega) { return MonomialOrder::weight(omega, MonomialOrder::grevlex()); }

}  // namespace

Ideal initial_ideal_weight(const Ideal& ideal, const WeightVector& omega) {
  const auto& gb = ideal.basis(refined(omega));
  std::vector<Polynomial> gens;
  gens.reserve(gb.size());
  for (const auto& g : gb.elements()) gens.push_back(initial_form(g, omega));
  return Ideal(ideal.ring(), std::move(gens));
}

bool initial_ideal_is_monomial(const Ideal& ideal, const WeightVector& omega) {
  const auto& gb = ideal.basis(refined(omega));
  for (const auto& g : gb.elements())
    if (!initial_form(g, omega).is_monomial()) return false;
  return true;
}

Ideal omega_homogenize_ideal(const Ideal& ideal, const WeightVector& omega) {
  const Ring target = ring_with_t(ideal.ring());
  const auto& gb = ideal.basis(refined(omega));
  std::vector<Polynomial> gens;
  gens.reserve(gb.size());
  for (const auto& g : gb.elements()) gens.push_back(omega_homogenize(g, omega));
  return Ideal(target, std::move(gens));
}

Ideal omega_homogenize_ideal_by_saturation(const Ideal& ideal, const WeightVector& omega) {
  const Ring target = ring_with_t(ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(omega_homogenize(g, omega));
  return saturate(Ideal(target, std::move(gens)), Polynomial::variable(target, target->size() - 1));
}

Ideal dehomogenize_ideal(const Ideal& ideal) {
  if (!ideal.ring()->has_t()) throw InvalidInput("ring has no homogenizing variable");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(dehomogenize(g));
  return Ideal(ring_without_t(ideal.ring()), std::move(gens));
}

WeightVector weight_for_order(const Ideal& ideal, const MonomialOrder& order) {
  const std::size_t n = ideal.ring()->size();
  order.validate(n);
  const auto& gb = ideal.basis(order);
  if (gb.is_zero()) throw InvalidInput("weight_for_order needs a nonzero ideal");
  if (gb.is_unit()) throw InvalidInput("weight_for_order needs a proper ideal");

  // With w = 1 + y, the condition w.d >= 1 reads d.y >= 1 - sum(d).
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t k = 0; k < gb.size(); ++k) {
    const auto& lead = gb.leading_monomials()[k];
    for (const auto& t : gb.elements()[k].terms()) {
      if (t.monomial == lead) continue;
      std::vector<Rational> row(n);
      bool nonnegative = true;
      long sum = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const int d = lead[i] - t.monomial[i];
        row[i] = Rational(d);
        sum += d;
        if (d < 0) nonnegative = false;
      }
      if (nonnegative) continue;
      rows.push_back(std::move(row));
      rhs.push_back(Rational(1 - sum));
    }
  }
  const auto y = feasible_point(rows, rhs, n);
  if (!y) throw InternalError("no weight vector represents the order on this ideal");

  mpz_class den = 1;
  for (const auto& v : *y) den = lcm(den, v.denominator());
  std::vector<std::int64_t> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class entry = den + (*y)[i].numerator() * (den / (*y)[i].denominator());
    if (!entry.fits_slong_p()) throw InternalError("weight vector entry exceeds 64 bits");
    w[i] = entry.get_si();
  }
  WeightVector omega(std::move(w));

  const MonomialIdeal lt = lt_ideal(ideal, order);
  if (!ideal_equal(initial_ideal_weight(ideal, omega), Ideal(ideal.ring(), lt.to_polynomials())))
    throw InternalError("weight vector " + omega.to_string() + " does not reproduce the leading term ideal");
  return omega;
}

Ideal substitute_linear(const Ideal& ideal, const RationalMatrix& m) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute_linear(g, m));
  return Ideal(ideal.ring(), std::move(gens));
}

GinSample generic_initial_sample(const Ideal& ideal, const MonomialOrder& order, std::uint64_t seed) {
  if (!ideal.is_graded()) throw InvalidInput("generic initial ideals need homogeneous generators");
  const std::size_t n = ideal.ring()->size();
  order.validate(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-10000, 10000);
  auto random_change = [&] {
    while (true) {
      RationalMatrix m(n, std::vector<Rational>(n));
      for (auto& row : m)
        for (auto& v : row) v = Rational(entry(rng));
      if (!determinant(m).is_zero()) return m;
    }
  };
  RationalMatrix g1 = random_change(), g2 = random_change();
  MonomialIdeal first = lt_ideal(substitute_linear(ideal, g1), order);
  const bool stable = first == lt_ideal(substitute_linear(ideal, g2), order);
  return {std::move(first), stable, std::move(g1), std::move(g2)};
}

}  // namespace gdc
