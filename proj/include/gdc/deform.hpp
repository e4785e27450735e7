#pragma once

#include <cstdint>

#include "gdc/groebner.hpp"

namespace gdc {

/// in_w(I), generated by the initial forms of a basis under weight(w, grevlex).
Ideal initial_ideal_weight(const Ideal& ideal, const WeightVector& omega);

/// True iff in_w(I) is generated by monomials.
bool initial_ideal_is_monomial(const Ideal& ideal, const WeightVector& omega);

/// The w-homogenization of I in P[t], from a basis under weight(w, grevlex).
Ideal omega_homogenize_ideal(const Ideal& ideal, const WeightVector& omega);

/// Same ideal built as (w-homogenized generators) : t^infinity.
Ideal omega_homogenize_ideal_by_saturation(const Ideal& ideal, const WeightVector& omega);

/// The ideal of P obtained by setting t = 1.
Ideal dehomogenize_ideal(const Ideal& ideal);

/// A strictly positive integer weight whose initial ideal is LT_order(I).
/// Throws InternalError if the computed weight fails verification.
WeightVector weight_for_order(const Ideal& ideal, const MonomialOrder& order);

struct GinSample {
  MonomialIdeal initial;
  bool stable;
  RationalMatrix first_change;
  RationalMatrix second_change;
};

/// LT_order of I after a random linear change of coordinates, compared with
/// a second independent change. Requires graded generators.
GinSample generic_initial_sample(const Ideal& ideal, const MonomialOrder& order, std::uint64_t seed);

/// The image of I under x -> M x.
Ideal substitute_linear(const Ideal& ideal, const RationalMatrix& m);

}  // namespace gdc
