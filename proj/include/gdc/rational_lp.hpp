#pragma once

#include <optional>
#include <vector>

#include "gdc/ring.hpp"

namespace gdc {

/// Finds some y >= 0 with rows[i] . y >= rhs[i] for all i, by a Phase-I
/// simplex in exact arithmetic with Bland's pivot rule. Returns nullopt when
/// the system is infeasible.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& rows,
                                                    const std::vector<Rational>& rhs, std::size_t num_vars);

}  // namespace gdc
