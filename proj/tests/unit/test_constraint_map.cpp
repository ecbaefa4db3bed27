#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fairsplit/constraint_map.hpp"
#include "fairsplit/errors.hpp"

using namespace fairsplit;

namespace {

JoinedFace jf(std::vector<Face> slots) { return JoinedFace{std::move(slots)}; }

// Re-derivation of the membership rule from the two size conditions.
bool sigma_oracle(const std::vector<int>& sizes, int k, int t) {
  int small = 0;
  for (int s : sizes) {
    if (s > k - 1) return false;
    if (s <= k - 2) ++small;
  }
  return small >= t - 1;
}

// Expected direction mask: the smallest slot, ties by the earliest vertex in `order`;
// all empty minimal slots share the weight.
std::uint32_t direction_oracle(const JoinedFace& f, const std::vector<int>& order) {
  int q = static_cast<int>(f.slots.size());
  std::size_t smallest = 1000;
  for (auto& s : f.slots) smallest = std::min(smallest, s.size());
  if (smallest == 0) {
    std::uint32_t m = 0;
    for (int i = 0; i < q; ++i)
      if (f.slots[i].empty()) m |= 1u << i;
    return m;
  }
  for (int v : order)
    for (int i = 0; i < q; ++i)
      if (f.slots[i].size() == smallest &&
          std::find(f.slots[i].begin(), f.slots[i].end(), v) != f.slots[i].end())
        return 1u << i;
  return 0;
}

std::vector<Rational> proj_e(int j, int q) {
  std::vector<Rational> v(q, Rational(-1, q));
  v[j - 1] = Rational(q - 1, q);
  return v;
}

}  // namespace

TEST_CASE("sigma membership examples") {
  CHECK(sigma_member(jf({{1}, {2}}), 2, 2, 1).member);
  auto r = sigma_member(jf({{1}, {2}}), 2, 2, 2);
  CHECK_FALSE(r.member);
  CHECK_FALSE(r.witness.empty());
  CHECK(sigma_member(jf({{1}, {2}, {3}}), 3, 2, 1).member);
  CHECK_FALSE(sigma_member(jf({{1, 2}, {3}, {4}}), 3, 2, 1).member);
  CHECK_THROWS_AS(sigma_member(jf({{1}, {1}}), 2, 2, 1), InputError);
  CHECK_THROWS_AS(sigma_member(jf({{1}, {9}}), 2, 2, 1), InputError);
  CHECK_THROWS_AS(sigma_member(jf({{1}}), 2, 2, 1), InputError);
}

TEST_CASE("sigma membership agrees with the size rule and bounds the union") {
  for (int q = 2; q <= 4; ++q)
    for (int k = 1; k <= 3; ++k)
      for (int t = 1; t <= q; ++t) {
        if (k < std::min(t, 2) || q * k - t > 7) continue;
        auto inst = PhiInstance::build(q, k, t);
        for (std::uint64_t c = 0; c < inst.code_count(); ++c) {
          auto face = inst.decode(c);
          std::vector<int> sizes;
          int total = 0;
          for (auto& s : face.slots) {
            sizes.push_back(static_cast<int>(s.size()));
            total += static_cast<int>(s.size());
          }
          bool m = sigma_member(face, q, k, t).member;
          CHECK(m == sigma_oracle(sizes, k, t));
          CHECK(inst.in_sigma(c) == m);
          if (m) CHECK(total <= q * (k - 1) - t + 1);
        }
      }
}

TEST_CASE("phi assignments at barycentric vertices") {
  auto inst = PhiInstance::build(2, 2, 1);
  CHECK(inst.assignment(jf({{1, 2}, {3}})) == proj_e(2, 2));
  CHECK(inst.assignment(jf({{1}, {2}})) == std::vector<Rational>{0, 0});
  CHECK(inst.assignment(jf({{2}, {1}})) == std::vector<Rational>{0, 0});

  // tie between two 2-sets on four vertices: vertex 1 sits in the first slot
  auto tie = PhiInstance::build(2, 3, 2);
  CHECK_FALSE(tie.in_sigma(tie.encode(jf({{1, 3}, {2, 4}}))));
  CHECK(tie.assignment(jf({{1, 3}, {2, 4}})) == proj_e(1, 2));
  CHECK(tie.assignment(jf({{2, 4}, {1, 3}})) == proj_e(2, 2));
  // with five vertices the same face lies in the zero set
  auto five = PhiInstance::build(2, 3, 1);
  CHECK(five.assignment(jf({{1, 3}, {2, 4}})) == std::vector<Rational>{0, 0});
  // reversing the vertex order moves the tie to the slot holding 4
  auto rev = PhiInstance::build(2, 3, 2, {4, 3, 2, 1});
  CHECK(rev.assignment(jf({{1, 3}, {2, 4}})) == proj_e(2, 2));
}

TEST_CASE("direction masks agree with the oracle under several orders") {
  std::mt19937 rng(5);
  for (int q = 2; q <= 4; ++q)
    for (int k = 1; k <= 3; ++k)
      for (int t = 1; t <= q; ++t) {
        if (k < std::min(t, 2) || q * k - t > 6) continue;
        std::vector<int> order(q * k - t);
        std::iota(order.begin(), order.end(), 1);
        for (int rep = 0; rep < 3; ++rep) {
          auto inst = PhiInstance::build(q, k, t, order);
          for (std::uint64_t c = 1; c < inst.code_count(); ++c) {
            if (inst.in_sigma(c)) {
              CHECK(inst.direction_mask(c) == 0);
            } else {
              CHECK(inst.direction_mask(c) == direction_oracle(inst.decode(c), order));
            }
          }
          std::shuffle(order.begin(), order.end(), rng);
        }
      }
}

TEST_CASE("projection and evaluation") {
  CHECK(project_to_wq({1, 0, 0}) == std::vector<Rational>{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});
  CHECK(direction_vector(0b011, 3) ==
        std::vector<Rational>{Rational(1, 6), Rational(1, 6), Rational(-1, 3)});

  auto inst = PhiInstance::build(2, 2, 1);
  // a chain inside the zero set
  CHECK(evaluate_phi(inst, {jf({{1}, {}}), jf({{1}, {2}})}, {Rational(1, 3), Rational(2, 3)}) ==
        std::vector<Rational>{0, 0});
  // vertex evaluation equals the assignment
  CHECK(evaluate_phi(inst, {jf({{1, 2}, {3}})}, {1}) == proj_e(2, 2));
  // opposite directions cancel at the midpoint
  auto e2 = jf({{1, 2}, {}});
  auto e1 = jf({{}, {1, 2}});
  CHECK(inst.assignment(e2) == proj_e(2, 2));
  CHECK(inst.assignment(e1) == proj_e(1, 2));
  auto mid = evaluate_phi(inst, {jf({{2}, {}}), jf({{2}, {1, 3}})}, {Rational(1, 2), Rational(1, 2)});
  CHECK(mid == std::vector<Rational>{Rational(1, 4), Rational(-1, 4)});

  CHECK_THROWS_AS(evaluate_phi(inst, {jf({{1, 2}, {}}), jf({{1}, {}})}, {Rational(1, 2), Rational(1, 2)}),
                  InputError);
  CHECK_THROWS_AS(evaluate_phi(inst, {jf({{1}, {}})}, {Rational(1, 2)}), InputError);
  CHECK_THROWS_AS(evaluate_phi(inst, {jf({{}, {}})}, {1}), InputError);
}

TEST_CASE("phi is affine along chains") {
  auto inst = PhiInstance::build(3, 2, 1);
  std::vector<JoinedFace> chain{jf({{1}, {}, {}}), jf({{1, 2}, {}, {}}), jf({{1, 2}, {3}, {}}),
                                jf({{1, 2}, {3, 4}, {5}})};
  std::vector<Rational> a{Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 8)};
  std::vector<Rational> b{0, Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  std::vector<Rational> m(4);
  for (int i = 0; i < 4; ++i) m[i] = (a[i] + b[i]) / 2;
  auto pa = evaluate_phi(inst, chain, a), pb = evaluate_phi(inst, chain, b), pm = evaluate_phi(inst, chain, m);
  for (int j = 0; j < 3; ++j) CHECK(pm[j] == (pa[j] + pb[j]) / 2);
}

TEST_CASE("zero set verification on small triples") {
  for (auto [q, k, t] : std::vector<std::array<int, 3>>{{2, 2, 1}, {2, 2, 2}, {3, 2, 1}, {2, 1, 1}, {3, 2, 3}}) {
    auto inst = PhiInstance::build(q, k, t);
    auto r = verify_zero_set(inst);
    CHECK(r.ok());
    auto lit = verify_zero_set_literal(inst);
    CHECK(lit.ok());
  }
  // (q+1)^n - 1 nonempty joined faces
  CHECK(verify_zero_set(PhiInstance::build(2, 2, 1)).faces == 26);
}

TEST_CASE("equivariance") {
  auto r = verify_equivariance(PhiInstance::build(2, 2, 1));
  CHECK(r.ok());
  CHECK(r.permutations == 2);
  auto r3 = verify_equivariance(PhiInstance::build(3, 2, 1));
  CHECK(r3.ok());
  CHECK(r3.permutations == 6);
  CHECK_FALSE(r3.generators_only);
  auto big = verify_equivariance(PhiInstance::build(4, 2, 1), 1000);
  CHECK(big.generators_only);
  CHECK(big.ok());
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(PhiInstance::build(1, 2, 1), InputError);
  CHECK_THROWS_AS(PhiInstance::build(2, 2, 3), InputError);
  CHECK_THROWS_AS(PhiInstance::build(2, 1, 2), InputError);
  CHECK_THROWS_AS(PhiInstance::build(2, 2, 1, {1, 1, 2}), InputError);
}

TEST_CASE("exact LP feasibility") {
  LPFeasibilityProblem lp;
  lp.variables = 2;
  lp.add_row({1, 1}, 1);
  lp.add_row({1, -1}, 0);
  auto x = solve_feasibility(lp);
  REQUIRE(x);
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 2));

  LPFeasibilityProblem bad;
  bad.variables = 2;
  bad.add_row({1, 1}, -1);
  CHECK_FALSE(solve_feasibility(bad));
}
