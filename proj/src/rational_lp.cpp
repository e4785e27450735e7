#include "gdc/rational_lp.hpp"

#include "gdc/errors.hpp"

namespace gdc {

std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& rows,
                                                    const std::vector<Rational>& rhs, std::size_t num_vars) {
  if (rows.size() != rhs.size()) throw DimensionMismatch("constraint rows and right-hand sides differ in length");
  const std::size_t m = rows.size();
  // Columns: y (num_vars), surplus s (m), artificial a (one per row with rhs > 0), then the rhs.
  std::vector<std::size_t> artificial_row;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != num_vars) throw DimensionMismatch("constraint row has the wrong length");
    if (rhs[i].sign() > 0) artificial_row.push_back(i);
  }
  const std::size_t cols = num_vars + m + artificial_row.size();
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  std::size_t next_art = num_vars + m;
  for (std::size_t i = 0; i < m; ++i) {
    // a.y - s = b; rows with b <= 0 are negated so the surplus column is basic.
    const bool positive = rhs[i].sign() > 0;
    const Rational sign(positive ? 1 : -1);
    for (std::size_t j = 0; j < num_vars; ++j) tab[i][j] = sign * rows[i][j];
    tab[i][num_vars + i] = -sign;
    tab[i][cols] = sign * rhs[i];
    if (positive) {
      tab[i][next_art] = Rational(1);
      basis[i] = next_art++;
    } else {
      basis[i] = num_vars + i;
    }
  }

  // Phase-I objective: minimize the sum of artificials, kept as reduced costs.
  std::vector<Rational> cost(cols + 1);
  for (std::size_t i : artificial_row)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < num_vars + m || j == cols) cost[j] -= tab[i][j];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter].sign() <= 0) continue;
      const Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw InternalError("phase-one objective is unbounded");
    const Rational pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter].is_zero()) continue;
      const Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (!cost[enter].is_zero()) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  if (!cost[cols].is_zero()) return std::nullopt;

  std::vector<Rational> y(num_vars);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < num_vars) y[basis[i]] = tab[i][cols];
  return y;
}

}  // namespace gdc
