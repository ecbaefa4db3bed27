#include <doctest.h>

#include <functional>

#include "fairsplit/errors.hpp"
#include "fairsplit/kneser.hpp"
#include "oracles.hpp"

using namespace fairsplit;

namespace {

// Plain backtracking: smallest c admitting a coloring with no monochromatic hyperedge.
int chi_oracle(const Hypergraph& h) {
  int nv = static_cast<int>(h.vertices.size());
  std::vector<std::vector<int>> touching(nv);
  for (int e = 0; e < static_cast<int>(h.edges.size()); ++e)
    for (int v : h.edges[e]) touching[v].push_back(e);
  for (int c = 1;; ++c) {
    std::vector<int> col(nv, 0);
    std::function<bool(int)> go = [&](int v) {
      if (v == nv) return true;
      for (int x = 1; x <= c; ++x) {
        col[v] = x;
        bool bad = false;
        for (int e : touching[v]) {
          bool mono = true;
          for (int u : h.edges[e])
            if (col[u] != x) mono = false;
          if (mono) bad = true;
        }
        if (!bad && go(v + 1)) return true;
      }
      col[v] = 0;
      return false;
    };
    if (go(0)) return c;
  }
}

Hypergraph kg(int n, int k, int q, KneserStability s) { return build_hypergraph({n, k, q, s}); }

}  // namespace

TEST_CASE("hypergraph sizes") {
  auto h = kg(4, 2, 2, KneserStability::none);
  CHECK(h.vertices.size() == 6);
  CHECK(h.edges.size() == 3);
  CHECK(kg(6, 2, 2, KneserStability::path).vertices.size() == 10);
  CHECK(kg(5, 2, 2, KneserStability::cycle).vertices.size() == 5);
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k <= std::min(4, n); ++k)
      for (int s = 2; s <= 3; ++s) {
        // s-stable k-subsets of a path: C(n - (s-1)(k-1), k)
        auto hp = kg(n, k, s, KneserStability::path);
        CHECK(static_cast<long long>(hp.vertices.size()) == oracle::binomial(n - (s - 1) * (k - 1), k));
      }
  // colex order and disjoint hyperedges
  for (std::size_t i = 1; i < h.vertices.size(); ++i) CHECK(h.vertices[i - 1].max() <= h.vertices[i].max());
  for (const auto& e : h.edges) CHECK(h.vertices[e[0]].disjoint(h.vertices[e[1]]));
}

TEST_CASE("kneser formula") {
  CHECK(kneser_formula(6, 2, 2) == 4);
  CHECK(kneser_formula(9, 2, 3) == 3);
  CHECK(kneser_formula(10, 2, 3) == 4);
}

TEST_CASE("chromatic numbers of small Kneser graphs") {
  CHECK(chromatic_number(kg(6, 2, 2, KneserStability::none)).chi == 4);
  CHECK(chromatic_number(kg(6, 2, 2, KneserStability::path)).chi == 4);
  CHECK(chromatic_number(kg(5, 2, 2, KneserStability::none)).chi == 3);
  // no hyperedges at all
  CHECK(chromatic_number(kg(3, 2, 2, KneserStability::none)).chi == 1);
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      auto h = kg(n, k, 2, KneserStability::none);
      auto r = chromatic_number(h);
      CHECK(r.chi == n - 2 * k + 2);
      CHECK(is_proper(h, r.witness));
      CHECK(r.lower_bound <= r.chi);
      auto hs = kg(n, k, 2, KneserStability::path);
      CHECK(chromatic_number(hs).chi <= r.chi);
    }
}

TEST_CASE("chromatic numbers agree with a naive colorer") {
  for (auto inst : std::vector<KneserInstance>{{7, 2, 3, KneserStability::none},
                                               {8, 2, 3, KneserStability::path},
                                               {7, 3, 2, KneserStability::cycle},
                                               {9, 2, 3, KneserStability::cycle},
                                               {7, 2, 2, KneserStability::path}}) {
    auto h = build_hypergraph(inst);
    CHECK(chromatic_number(h).chi == chi_oracle(h));
  }
}

TEST_CASE("coloring from a partition") {
  // q=2, single block of size 2k_1-1: color 1 exactly on sets with at least k_1 points in V_1
  auto p = VertexPartition::intervals({5, 3});
  auto h = kg(8, 3, 2, KneserStability::path);
  auto c = coloring_from_partition(h, p, {3, 2});
  CHECK(c.colors <= 3);
  for (std::size_t v = 0; v < h.vertices.size(); ++v) {
    auto s = h.vertices[v];
    int want = (s & p.block(0)).size() >= 3 ? 1 : ((s & p.block(1)).size() >= 2 ? 2 : 3);
    CHECK(c.color[v] == want);
  }
  for (const auto& e : h.edges) {
    int c0 = c.color[e[0]];
    bool mono = c.color[e[1]] == c0;
    if (mono) CHECK(c0 == 3);
  }
  CHECK_THROWS_AS(coloring_from_partition(h, VertexPartition::intervals({4, 4}), {2, 2}), InputError);
}

TEST_CASE("reduction on paths") {
  auto r55 = splitting_from_coloring(10, VertexPartition::intervals({5, 5}), 2);
  CHECK(r55.ok());
  CHECK(r55.padded_n == 10);
  CHECK(r55.certificate.almost_fair_ok);
  CHECK(r55.certificate.stability_ok);

  auto r54 = splitting_from_coloring(9, VertexPartition::intervals({5, 4}), 2);
  CHECK(r54.ok());
  CHECK(r54.padded_n == 10);
  CHECK(r54.certificate.almost_fair_ok);
  CHECK(r54.certificate.balanced_ok);

  KneserSplitOptions opt;
  opt.verify_chromatic = true;
  auto r3 = splitting_from_coloring(8, VertexPartition::whole(8), 3, opt);
  REQUIRE(r3.chromatic);
  CHECK(*r3.chromatic == r3.formula);
  CHECK(r3.ok());
  CHECK(r3.splitting.q() == 3);
  CHECK(r3.certificate.almost_fair_ok);
  for (auto s : r3.splitting.sets) CHECK(is_q_stable(s, 3, 8));
}

TEST_CASE("rebalancing removes one vertex when the pads differ by two") {
  KneserSplitOptions opt;
  opt.edge_rank = 3;
  auto p = VertexPartition::intervals({2, 2, 2});
  auto r = splitting_from_coloring(6, p, 2, opt);
  REQUIRE(r.rebalance);
  CHECK(r.ok());
  CHECK(r.padded_n == 9);
  CHECK(r.padded.sets == std::vector<VertexSet>{{1, 3, 5}, {4, 7, 9}});
  CHECK(r.rebalance->ell1 == 0);
  CHECK(r.rebalance->ell2 == 2);
  CHECK(r.rebalance->removals == 1);
  CHECK(r.splitting.sets == std::vector<VertexSet>{{1, 5}, {4}});
  // touched block {3,4}: k_j - 2 = 0 = floor(3/2) - 1
  CHECK(r.certificate.counts[0][1] == 0);
  CHECK(r.certificate.almost_quota[1] == 0);
  CHECK(r.certificate.balanced_ok);

  auto all = splittings_from_top_edges(6, p, 2, KneserSplitOptions{}, 0, 1000);
  CHECK(all.size() == 32);
  for (const auto& x : all) CHECK(x.ok());
}

TEST_CASE("rebalance with no pad difference is a plain strip") {
  // S'_1 = {1,3}, S'_2 = {2,4} on 1..4 without pads
  auto p = VertexPartition::intervals({4});
  auto rb = rebalance_q2(4, 4, p, Splitting{{{1, 3}, {2, 4}}}, std::vector<int>(5, -1));
  CHECK(rb.removals == 0);
  CHECK(rb.anomalies.empty());
  CHECK(rb.splitting.sets == std::vector<VertexSet>{{1, 3}, {2, 4}});
}

TEST_CASE("every interval partition of short paths reduces cleanly") {
  for (int n = 2; n <= 8; ++n) {
    for (int a = 1; a < n; ++a) {
      auto p = VertexPartition::intervals({a, n - a});
      auto r = splitting_from_coloring(n, p, 2);
      CHECK_MESSAGE(r.ok(), "n=" << n << " a=" << a);
    }
  }
}

TEST_CASE("kneser base splitter composes") {
  auto base = kneser_base_splitter();
  CHECK(base.q == 2);
  CHECK(base.s == 2);
  auto r = power_of_two_splitting(15, VertexPartition::whole(15), 2, &base);
  CHECK(r.splitting.q() == 4);
  CHECK(r.certificate.almost_fair_ok);
}
