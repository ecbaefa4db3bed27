#include <doctest.h>

#include "fairsplit/errors.hpp"
#include "fairsplit/geometry.hpp"

using namespace fairsplit;

namespace {

RationalPoint pt(Rational x, Rational y) { return {x, y}; }

PointConfiguration plane(const std::vector<std::pair<int, int>>& xy) {
  PointConfiguration c;
  c.dim = 2;
  for (auto [x, y] : xy) c.points.push_back(pt(x, y));
  return c;
}

// Proper or touching crossing of two closed segments, by orientation signs.
int orient(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  Rational d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sgn(d);
}
bool on_segment(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p) {
  return orient(a, b, p) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}
bool segments_meet(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c, const RationalPoint& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

}  // namespace

TEST_CASE("moment curve points") {
  auto c = moment_curve({0, 1, 2}, 2);
  CHECK(c.points == std::vector<RationalPoint>{{0, 0}, {1, 1}, {2, 4}});
  CHECK(moment_points({Rational(1, 2)}, 1).size() == 1);
  auto m4 = moment_points({1, 2, 3, 4, 5, 6}, 2);
  CHECK(m4.dim == 4);
  CHECK(m4.points[2] == RationalPoint{3, 9, 27, 81});
  CHECK_THROWS_AS(moment_curve({1, 1}, 2), InputError);
  CHECK_THROWS_AS(moment_curve({2, 1}, 2), InputError);
}

TEST_CASE("stretched parameters") {
  CHECK(stretched_parameters(4) == std::vector<Rational>{4, 16, 256, 65536});
  CHECK(stretched_parameters(2, 3) == std::vector<Rational>{9, 81});
  CHECK(stretched_moment_points(1, 3).size() == 1);
}

TEST_CASE("hull intersection basics") {
  CHECK(hulls_intersect({{pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)}}));
  CHECK_FALSE(hulls_intersect({{pt(0, 0), pt(1, 0), pt(0, 1)}, {pt(5, 5), pt(6, 5), pt(5, 6)}}));
  CHECK_FALSE(hulls_intersect({{pt(0, 0)}, {}}));
  CHECK(hulls_intersect({{pt(1, 1)}, {pt(0, 0), pt(2, 2)}, {pt(1, 0), pt(1, 3)}}));
  CHECK_THROWS_AS(hulls_intersect({{pt(0, 0)}, {RationalPoint{1}}}), InputError);
}

TEST_CASE("hexagon: alternating edges cross") {
  // rational symmetric hexagon, labels in cyclic order
  auto hex = plane({{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}});
  int crossing = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c)
        for (int d = c + 1; d <= 6; ++d) {
          if (c == a || c == b || d == a || d == b) continue;
          bool expect = segments_meet(hex.points[a - 1], hex.points[b - 1], hex.points[c - 1], hex.points[d - 1]);
          bool got = hulls_intersect(hex, {VertexSet{a, b}, VertexSet{c, d}});
          CHECK(got == expect);
          CHECK(got == gale_alternating({a, b}, {c, d}));
          crossing += got;
        }
  CHECK(crossing > 0);
  CHECK(hulls_intersect(hex, {VertexSet{1, 4}, VertexSet{3, 6}}));
}

TEST_CASE("gale evenness") {
  CHECK(gale_alternating({1, 3}, {2, 4}));
  CHECK_FALSE(gale_alternating({1, 2}, {3, 4}));
  CHECK_THROWS_AS(gale_alternating({1, 3}, {2}), InputError);
  auto m = moment_points({1, 2, 3, 4, 5, 6}, 2);
  CHECK(hulls_intersect(m, {VertexSet{1, 3, 5}, VertexSet{2, 4, 6}}));
  CHECK(gale_alternating({1, 3, 5}, {2, 4, 6}));
}

TEST_CASE("gale evenness agrees with the LP on the moment curve") {
  for (int d = 1; d <= 2; ++d) {
    std::vector<Rational> params;
    for (int i = 1; i <= 2 * d + 2; ++i) params.push_back(i);
    auto m = moment_points(params, d);
    int n = m.size();
    for_each_disjoint_family(n, 2, 2 * (d + 1), 2 * (d + 1), [&](const std::vector<VertexSet>& f) {
      if (f[0].size() == d + 1) CHECK(hulls_intersect(m, f) == gale_alternating(f[0], f[1]));
      return true;
    });
  }
}

TEST_CASE("disjoint family enumeration counts") {
  // unordered pairs of disjoint nonempty subsets of a 4-set: (3^4 - 2*2^4 + 1)/2
  long long count = 0;
  for_each_disjoint_family(4, 2, 0, 4, [&](const std::vector<VertexSet>&) { ++count; return true; });
  CHECK(count == 25);
  CHECK_THROWS_AS(for_each_disjoint_family(8, 2, 0, 8, [](const std::vector<VertexSet>&) { return true; }, 10),
                  ResourceError);
}

TEST_CASE("strong general position") {
  // crossing diagonals use four points, beyond the (q-1)(d+1) = 3 that the check inspects
  auto square = plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(strong_general_position_check(square, 2).ok);
  auto collinear = plane({{0, 0}, {1, 1}, {2, 2}, {5, 0}});
  auto r = strong_general_position_check(collinear, 2);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.witness.empty());
  CHECK(hulls_intersect(collinear, r.witness));
  // a triangle: no two disjoint subsets of its vertices have meeting hulls
  CHECK(strong_general_position_check(plane({{0, 0}, {4, 0}, {0, 4}}), 2).ok);
  PointConfiguration one;
  one.dim = 2;
  one.points = {pt(0, 0)};
  CHECK(strong_general_position_check(one, 2).ok);
}

TEST_CASE("tverberg search") {
  auto line = moment_curve({0, 1, 2}, 1);
  auto t = tverberg_search(line, 2);
  REQUIRE(t);
  CHECK(*t == std::vector<VertexSet>{{1, 3}, {2}});

  auto inner = plane({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  auto ti = tverberg_search(inner, 2);
  REQUIRE(ti);
  CHECK(*ti == std::vector<VertexSet>{{1, 2, 3}, {4}});

  auto convex = plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto tc = tverberg_search(convex, 2);
  REQUIRE(tc);
  CHECK(*tc == std::vector<VertexSet>{{1, 3}, {2, 4}});

  // too few points for a Radon partition
  CHECK_FALSE(tverberg_search(plane({{0, 0}, {4, 0}, {0, 4}}), 2));
  // (q-1)(d+1)+1 points on the moment curve always split
  for (auto [q, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    std::vector<Rational> params;
    for (int i = 1; i <= (q - 1) * (d + 1) + 1; ++i) params.push_back(i);
    CHECK(tverberg_search(moment_curve(params, d), q).has_value());
    params.pop_back();
    auto fewer = moment_curve(params, d);
    if (strong_general_position_check(fewer, q).ok) CHECK_FALSE(tverberg_search(fewer, q).has_value());
  }
}

TEST_CASE("weak stability equivalence on stretched points") {
  auto pts = stretched_moment_points(4, 2);
  auto r = weak_stability_equivalence(pts, 2, 3);
  CHECK(r.families > 0);
  CHECK(r.holds());
  CHECK(r.intersecting == r.weakly_stable);
}
