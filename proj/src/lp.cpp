#include "fairsplit/lp.hpp"

#include "fairsplit/errors.hpp"

namespace fairsplit {

void LPFeasibilityProblem::add_row(std::vector<Rational> coeffs, Rational value) {
  if (static_cast<int>(coeffs.size()) != variables) throw InputError("lp: row length mismatch");
  rows.push_back(std::move(coeffs));
  rhs.push_back(std::move(value));
}

std::optional<std::vector<Rational>> solve_feasibility(const LPFeasibilityProblem& lp) {
  const int m = static_cast<int>(lp.rows.size());
  const int n = lp.variables;
  if (static_cast<int>(lp.rhs.size()) != m) throw InputError("lp: rhs length mismatch");
  if (m == 0) return std::vector<Rational>(n, 0);

  // Tableau columns: n structural, m artificial, then rhs.
  const int cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, 0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const bool flip = lp.rhs[i] < 0;
    for (int j = 0; j < n; ++j) t[i][j] = flip ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
    t[i][n + i] = 1;
    t[i][cols] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-I objective (sum of artificials).
  std::vector<Rational> cost(cols + 1, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[cols] -= t[i][cols];
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (cost[j] < 0) { enter = j; break; }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw ContractError("lp: phase-I objective unbounded");
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (int j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][cols];
  }
  return x;
}

}  // namespace fairsplit
