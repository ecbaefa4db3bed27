#pragma once

// Exact rational point configurations and convex-hull intersection oracles.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fairsplit/lp.hpp"
#include "fairsplit/vertex_set.hpp"

namespace fairsplit {

using RationalPoint = std::vector<Rational>;

struct PointConfiguration {
  int dim = 0;
  std::vector<RationalPoint> points;  // point for label i is points[i-1]
  std::vector<Rational> params;       // curve parameters when built on the moment curve

  int size() const { return static_cast<int>(points.size()); }
  void validate() const;
};

inline constexpr std::int64_t kDefaultFamilyBudget = 50'000'000;

/// γ(t) = (t, t^2, ..., t^dim) for each parameter; parameters must increase strictly.
PointConfiguration moment_curve(const std::vector<Rational>& params, int dim);
/// Points on the moment curve in R^{2d}.
PointConfiguration moment_points(const std::vector<Rational>& params, int d);
/// t_i = base^(2^i), i = 1..n.
std::vector<Rational> stretched_parameters(int n, const Rational& base = 2);
/// n stretched points on the moment curve in R^dim.
PointConfiguration stretched_moment_points(int n, int dim, const Rational& base = 2);

/// Exact test for a common point of the convex hulls; false if any set is empty.
bool hulls_intersect(const std::vector<std::vector<RationalPoint>>& sets);
bool hulls_intersect(const PointConfiguration& config, const std::vector<VertexSet>& sets);

/// Merging both sets in label order strictly alternates between them.
bool gale_alternating(VertexSet s1, VertexSet s2);

/// Visits q pairwise disjoint nonempty label sets over 1..n whose total size lies in
/// [min_total, max_total], once per unordered family (sets ordered by smallest label).
/// The callback returns false to stop. Throws ResourceError past `budget` families.
void for_each_disjoint_family(int n, int q, int min_total, int max_total,
                              const std::function<bool(const std::vector<VertexSet>&)>& visit,
                              std::int64_t budget = kDefaultFamilyBudget);

struct GeneralPositionReport {
  bool ok = true;
  std::int64_t families_checked = 0;
  std::vector<VertexSet> witness;  // an intersecting family when !ok
};

/// No q disjoint subsets using at most (q-1)(dim+1) points have a common hull point.
GeneralPositionReport strong_general_position_check(const PointConfiguration& config, int q,
                                                    std::int64_t budget = kDefaultFamilyBudget);

/// First partition of all labels into q nonempty parts with intersecting hulls, in
/// restricted-growth order (label 1 in part 1, each new part opened by its smallest label).
std::optional<std::vector<VertexSet>> tverberg_search(const PointConfiguration& config, int q,
                                                      std::int64_t budget = kDefaultFamilyBudget);

struct WeakStabilityReport {
  int q = 0;
  int n = 0;
  std::int64_t families = 0;
  std::int64_t intersecting = 0;
  std::int64_t weakly_stable = 0;
  std::vector<std::vector<VertexSet>> mismatches;
  bool holds() const { return mismatches.empty(); }
};

/// Compares hull intersection with weak q-stability over all families of (q-1)n+1 points.
WeakStabilityReport weak_stability_equivalence(const PointConfiguration& config, int q, int n,
                                               std::int64_t budget = kDefaultFamilyBudget);

}  // namespace fairsplit
