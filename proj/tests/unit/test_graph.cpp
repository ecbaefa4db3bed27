#include <doctest.h>

#include "fairsplit/errors.hpp"
#include "fairsplit/graph.hpp"
#include "oracles.hpp"

using namespace fairsplit;

TEST_CASE("independence on the six-cycle") {
  auto c6 = family::cycle(6);
  CHECK(is_independent(c6, {1, 3, 5}));
  CHECK_FALSE(is_independent(c6, {1, 2}));
  CHECK(is_independent(c6, VertexSet{}));
  CHECK(is_independent(family::power_path(5, 2), {}));
}

TEST_CASE("quota arithmetic") {
  CHECK(almost_fair_quota(5, 2) == 2);
  CHECK(fair_quota(5, 2) == 2);
  CHECK(almost_fair_quota(1, 3) == 0);
  CHECK(almost_fair_quota(0, 2) == 0);
  for (int size = 0; size <= 40; ++size) {
    for (int q = 1; q <= 8; ++q) {
      // leftover bound: q quota-sized sets leave at most q-1 vertices
      CHECK(size - q * almost_fair_quota(size, q) >= 0);
      if (size >= q - 1) CHECK(size - q * almost_fair_quota(size, q) <= 2 * q - 1);
      CHECK(fair_quota(size, q) >= almost_fair_quota(size, q));
    }
  }
}

TEST_CASE("certificate for the six-cycle splitting") {
  auto c6 = family::cycle(6);
  auto p = VertexPartition::intervals({3, 3});
  SplittingSpec spec;
  spec.balanced = true;
  Splitting sp{{{1, 4}, {3, 6}}};
  auto cert = check_splitting(c6, p, sp, spec);
  CHECK(cert.almost_fair_ok);
  CHECK(cert.balanced_ok);
  CHECK(cert.faces_ok);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(cert.counts[i][j] == 1);
  CHECK(cert.satisfies(spec));
}

TEST_CASE("overlapping sets are an input error") {
  auto c6 = family::cycle(6);
  auto p = VertexPartition::intervals({3, 3});
  Splitting sp{{{1, 4}, {4, 6}}};
  CHECK_THROWS_AS(check_splitting(c6, p, sp, SplittingSpec{}), InputError);
  CHECK_THROWS_AS(check_splitting(family::cycle(5), p, Splitting{{{1}, {3}}}, SplittingSpec{}), InputError);
}

TEST_CASE("non-independent set flags the certificate, not an error") {
  auto c6 = family::cycle(6);
  auto p = VertexPartition::intervals({3, 3});
  auto cert = check_splitting(c6, p, Splitting{{{1, 2}, {4}}}, SplittingSpec{});
  CHECK_FALSE(cert.faces_ok);
  CHECK_FALSE(cert.satisfies(SplittingSpec{}));
}

TEST_CASE("two triangles on a path admit no almost fair pair") {
  auto g = family::path_with_two_triangles(8);
  auto p = VertexPartition(8, {VertexSet{1, 2, 3, 6, 7, 8}, VertexSet{4, 5}});
  auto ge = g.edges();
  oracle::EdgeList edges(ge.begin(), ge.end());
  std::vector<oracle::Mask> blocks{p.block(0).bits(), p.block(1).bits()};
  CHECK(oracle::count_almost_fair_pairs(8, edges, blocks) == 0);

  // every pair of disjoint independent sets leaves at least two triangle vertices
  auto ind = oracle::independent_sets(8, edges);
  int min_left = 99;
  for (auto a : ind)
    for (auto b : ind)
      if (!(a & b)) min_left = std::min(min_left, oracle::popcount(p.block(0).bits() & ~(a | b)));
  CHECK(min_left == 2);
}

TEST_CASE("stability predicates") {
  CHECK(is_q_stable({1, 4, 7}, 3, 7));
  CHECK_FALSE(is_q_stable({1, 3}, 3, 3));
  CHECK(is_q_stable({5}, 9, 5));
  CHECK_THROWS_AS(is_q_stable({8}, 2, 7), InputError);

  CHECK(is_weakly_q_stable({{1, 3}, {2, 4}}, 4) == WeakStability::stable);
  CHECK(is_weakly_q_stable({{1, 2}, {3, 4}}, 4) == WeakStability::not_stable);
  CHECK(is_weakly_q_stable({{1, 4}, {2, 5}, {3, 6}}, 6) == WeakStability::not_applicable);
  CHECK(is_weakly_q_stable({{1, 4}, {2, 5}, {3}}, 6) == WeakStability::stable);
  CHECK_THROWS_AS(is_weakly_q_stable({{1, 2}, {2, 3}}, 4), InputError);
}

TEST_CASE("weak stability matches a direct block scan") {
  // q=2: weakly stable iff the merged order alternates
  for (std::uint64_t mask = 0; mask < (1u << 7); ++mask) {
    VertexSet a(mask), b = VertexSet::range(7) - a;
    auto w = is_weakly_q_stable({a, b}, 7);
    bool alternates = true;
    for (int v = 1; v < 7; ++v)
      if (a.contains(v) == a.contains(v + 1)) alternates = false;
    if (a.empty() || b.empty()) continue;
    CHECK((w == WeakStability::stable) == alternates);
  }
}

TEST_CASE("degree profiles") {
  auto p5 = family::path(5);
  CHECK(degree_profile(p5, 3) == DegreeProfile{2, 2});
  CHECK(degree_profile(Graph(1), 1) == DegreeProfile{0, 0});
  CHECK(degree_profile(family::cycle(6), 1) == DegreeProfile{2, 2});
  CHECK_THROWS_AS(degree_profile(p5, 6), InputError);
}

TEST_CASE("generated families") {
  auto c6 = family::cycle(6);
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 6);
  auto pp = family::power_path(5, 2);
  std::vector<Edge> expect{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}};
  CHECK(pp.edges() == expect);
  auto cq = family::cliques_plus_isolated(2, 3);
  CHECK(cq.vertex_count() == 5);
  CHECK(cq.edge_count() == 2);
  CHECK(cq.degree(5) == 0);
  CHECK(generate_family("cycle", {6}) == c6);
  CHECK_THROWS_AS(generate_family("cycle", {}), InputError);
  CHECK_THROWS_AS(generate_family("nonsense", {3}), InputError);
}

TEST_CASE("relabeling preserves structure") {
  auto g = family::path_with_two_triangles(8);
  std::vector<int> perm{3, 1, 8, 2, 7, 5, 4, 6};
  auto h = g.relabeled(perm);
  CHECK(h.edge_count() == g.edge_count());
  for (auto [u, v] : g.edges()) CHECK(h.adjacent(perm[u - 1], perm[v - 1]));
}

TEST_CASE("partitions") {
  auto p = VertexPartition::intervals({3, 2});
  CHECK(p.block_count() == 2);
  CHECK(p.block_of(4) == 1);
  CHECK(p.block(0) == VertexSet{1, 2, 3});
  CHECK_THROWS_AS(VertexPartition(4, {VertexSet{1, 2}, VertexSet{2, 3, 4}}), InputError);
  CHECK_THROWS_AS(VertexPartition(4, {VertexSet{1, 2}, VertexSet{3}}), InputError);
}
