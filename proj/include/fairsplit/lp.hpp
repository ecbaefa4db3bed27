#pragma once

// Exact rational linear feasibility: does A x = b, x >= 0 have a solution?

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace fairsplit {

using Rational = mpq_class;

struct LPFeasibilityProblem {
  int variables = 0;
  std::vector<std::vector<Rational>> rows;  // each of length `variables`
  std::vector<Rational> rhs;

  void add_row(std::vector<Rational> coeffs, Rational value);
};

/// A feasible point, or nullopt when the system is infeasible. Phase-I simplex with Bland's rule.
std::optional<std::vector<Rational>> solve_feasibility(const LPFeasibilityProblem& lp);

}  // namespace fairsplit
