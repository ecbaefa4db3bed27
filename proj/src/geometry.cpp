#include "fairsplit/geometry.hpp"

#include "fairsplit/errors.hpp"
#include "fairsplit/graph.hpp"

namespace fairsplit {

void PointConfiguration::validate() const {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw InputError("geometry: point dimension mismatch");
  }
  if (!params.empty() && params.size() != points.size()) throw InputError("geometry: one parameter per point");
}

PointConfiguration moment_curve(const std::vector<Rational>& params, int dim) {
  if (dim < 1) throw InputError("geometry: dimension must be positive");
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (!(params[i - 1] < params[i])) throw InputError("geometry: parameters must increase strictly");
  }
  PointConfiguration c;
  c.dim = dim;
  c.params = params;
  for (const auto& t : params) {
    RationalPoint p;
    Rational power = t;
    for (int e = 1; e <= dim; ++e) {
      p.push_back(power);
      power *= t;
    }
    c.points.push_back(std::move(p));
  }
  return c;
}

PointConfiguration moment_points(const std::vector<Rational>& params, int d) {
  return moment_curve(params, 2 * d);
}

std::vector<Rational> stretched_parameters(int n, const Rational& base) {
  if (n < 0) throw InputError("geometry: negative point count");
  if (base <= 1) throw InputError("geometry: stretch base must exceed 1");
  std::vector<Rational> out;
  Rational t = base;
  for (int i = 1; i <= n; ++i) {
    t *= t;  // base^(2^i)
    out.push_back(t);
  }
  return out;
}

PointConfiguration stretched_moment_points(int n, int dim, const Rational& base) {
  return moment_curve(stretched_parameters(n, base), dim);
}

bool hulls_intersect(const std::vector<std::vector<RationalPoint>>& sets) {
  if (sets.empty()) throw InputError("hulls: no sets");
  int dim = -1;
  int vars = 0;
  for (const auto& s : sets) {
    if (s.empty()) return false;
    for (const auto& p : s) {
      if (dim < 0) dim = static_cast<int>(p.size());
      if (static_cast<int>(p.size()) != dim) throw InputError("hulls: dimension mismatch");
    }
    vars += static_cast<int>(s.size());
  }
  if (sets.size() == 1) return true;

  // Weights λ_{s,p} >= 0, Σ_p λ_{s,p} = 1, and Σ_p λ_{s,p} p equal across sets.
  LPFeasibilityProblem lp;
  lp.variables = vars;
  std::vector<int> offset;
  int off = 0;
  for (const auto& s : sets) {
    offset.push_back(off);
    off += static_cast<int>(s.size());
  }
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::vector<Rational> row(vars, 0);
    for (std::size_t p = 0; p < sets[s].size(); ++p) row[offset[s] + p] = 1;
    lp.add_row(std::move(row), 1);
  }
  for (std::size_t s = 1; s < sets.size(); ++s) {
    for (int c = 0; c < dim; ++c) {
      std::vector<Rational> row(vars, 0);
      for (std::size_t p = 0; p < sets[s].size(); ++p) row[offset[s] + p] = sets[s][p][c];
      for (std::size_t p = 0; p < sets[0].size(); ++p) row[offset[0] + p] = -sets[0][p][c];
      lp.add_row(std::move(row), 0);
    }
  }
  return solve_feasibility(lp).has_value();
}

bool hulls_intersect(const PointConfiguration& config, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<RationalPoint>> pts;
  for (const auto& s : sets) {
    std::vector<RationalPoint> one;
    s.for_each([&](int v) {
      if (v > config.size()) throw InputError("hulls: label outside configuration");
      one.push_back(config.points[v - 1]);
    });
    pts.push_back(std::move(one));
  }
  return hulls_intersect(pts);
}

bool gale_alternating(VertexSet s1, VertexSet s2) {
  if (s1.size() != s2.size()) throw InputError("gale: sets must have equal size");
  if (!s1.disjoint(s2)) throw InputError("gale: sets must be disjoint");
  int last = 0;
  bool ok = true;
  (s1 | s2).for_each([&](int v) {
    const int side = s1.contains(v) ? 1 : 2;
    if (side == last) ok = false;
    last = side;
  });
  return ok;
}

void for_each_disjoint_family(int n, int q, int min_total, int max_total,
                              const std::function<bool(const std::vector<VertexSet>&)>& visit,
                              std::int64_t budget) {
  if (q < 1) throw InputError("families: q must be positive");
  if (n > kMaxVertices) throw InputError("families: too many points");
  std::vector<VertexSet> sets(q);
  std::int64_t seen = 0;
  bool stop = false;
  std::function<void(int, int, int)> rec = [&](int v, int opened, int total) {
    if (stop) return;
    if (total > max_total) return;
    // Sets still to open need one point each.
    if (q - opened > n - v + 1) return;
    if (v > n) {
      if (opened < q || total < min_total) return;
      if (++seen > budget) throw ResourceError("families: budget exceeded");
      if (!visit(sets)) stop = true;
      return;
    }
    for (int i = 0; i < opened; ++i) {
      sets[i].insert(v);
      rec(v + 1, opened, total + 1);
      sets[i].erase(v);
      if (stop) return;
    }
    if (opened < q) {
      sets[opened].insert(v);
      rec(v + 1, opened + 1, total + 1);
      sets[opened].erase(v);
      if (stop) return;
    }
    rec(v + 1, opened, total);
  };
  rec(1, 0, 0);
}

GeneralPositionReport strong_general_position_check(const PointConfiguration& config, int q,
                                                    std::int64_t budget) {
  config.validate();
  GeneralPositionReport r;
  const int cap = (q - 1) * (config.dim + 1);
  for_each_disjoint_family(config.size(), q, 0, cap, [&](const std::vector<VertexSet>& fam) {
    ++r.families_checked;
    if (hulls_intersect(config, fam)) {
      r.ok = false;
      r.witness = fam;
      return false;
    }
    return true;
  }, budget);
  return r;
}

std::optional<std::vector<VertexSet>> tverberg_search(const PointConfiguration& config, int q,
                                                      std::int64_t budget) {
  config.validate();
  const int n = config.size();
  std::vector<VertexSet> parts(q);
  std::optional<std::vector<VertexSet>> found;
  std::int64_t seen = 0;
  std::function<void(int, int)> rec = [&](int v, int opened) {
    if (found) return;
    if (q - opened > n - v + 1) return;
    if (v > n) {
      if (++seen > budget) throw ResourceError("tverberg: budget exceeded");
      if (hulls_intersect(config, parts)) found = parts;
      return;
    }
    for (int i = 0; i < opened && !found; ++i) {
      parts[i].insert(v);
      rec(v + 1, opened);
      parts[i].erase(v);
    }
    if (opened < q && !found) {
      parts[opened].insert(v);
      rec(v + 1, opened + 1);
      parts[opened].erase(v);
    }
  };
  if (q >= 1 && n >= q) rec(1, 0);
  return found;
}

WeakStabilityReport weak_stability_equivalence(const PointConfiguration& config, int q, int n,
                                               std::int64_t budget) {
  config.validate();
  WeakStabilityReport r;
  r.q = q;
  r.n = n;
  const int total = (q - 1) * n + 1;
  for_each_disjoint_family(config.size(), q, total, total, [&](const std::vector<VertexSet>& fam) {
    ++r.families;
    const bool meet = hulls_intersect(config, fam);
    const bool weak = is_weakly_q_stable(fam, config.size()) == WeakStability::stable;
    r.intersecting += meet ? 1 : 0;
    r.weakly_stable += weak ? 1 : 0;
    if (meet != weak) r.mismatches.push_back(fam);
    return true;
  }, budget);
  return r;
}

}  // namespace fairsplit
