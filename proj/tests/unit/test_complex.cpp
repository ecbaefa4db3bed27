#include <doctest.h>

#include <algorithm>
#include <set>

#include "fairsplit/complex.hpp"
#include "fairsplit/errors.hpp"
#include "oracles.hpp"

using namespace fairsplit;

namespace {

// Facets as sorted label lists; the tags of these complexes are plain labels.
std::set<std::vector<int>> label_facets(const SimplicialComplex& k) {
  std::set<std::vector<int>> out;
  for (const auto& f : k.facets()) {
    std::vector<int> labels;
    for (int i : f) labels.push_back(k.tags()[i].get<int>());
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  }
  return out;
}

std::set<std::vector<int>> masks_to_lists(const std::vector<oracle::Mask>& masks) {
  std::set<std::vector<int>> out;
  for (auto m : masks) {
    std::vector<int> l;
    for (int v = 1; v <= 64; ++v)
      if (m >> (v - 1) & 1) l.push_back(v);
    out.insert(l);
  }
  return out;
}

}  // namespace

TEST_CASE("independence complex of the six-cycle") {
  auto k = independence_complex(family::cycle(6));
  auto c6 = family::cycle(6);
  auto ce = c6.edges();
  oracle::EdgeList edges(ce.begin(), ce.end());
  auto expect = masks_to_lists(oracle::maximal_independent_sets(6, edges));
  CHECK(label_facets(k) == expect);
  // frozen: two triangles {1,3,5},{2,4,6} and the three antipodal pairs
  CHECK(expect.size() == 5);
  CHECK(expect.count({1, 3, 5}) == 1);
  CHECK(expect.count({2, 4, 6}) == 1);
  CHECK(expect.count({1, 4}) == 1);
  CHECK(expect.count({2, 5}) == 1);
  CHECK(expect.count({3, 6}) == 1);
}

TEST_CASE("independence complex of small graphs") {
  CHECK(label_facets(independence_complex(Graph(3))) == std::set<std::vector<int>>{{1, 2, 3}});
  auto k3 = independence_complex(Graph(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(label_facets(k3) == std::set<std::vector<int>>{{1}, {2}, {3}});
}

TEST_CASE("independence complex agrees with brute force on random graphs") {
  std::uint64_t state = 12345;
  auto next = [&] { state = state * 6364136223846793005ULL + 1442695040888963407ULL; return state >> 33; };
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 8;
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (next() % 3 == 0) edges.push_back({u, v});
    Graph g(n, edges);
    oracle::EdgeList el(edges.begin(), edges.end());
    CHECK(label_facets(independence_complex(g)) == masks_to_lists(oracle::maximal_independent_sets(n, el)));
  }
}

TEST_CASE("skeleta") {
  auto s0 = skeleton(SimplicialComplex::simplex(3), 0);
  CHECK(s0.facets().size() == 3);
  CHECK(s0.dimension() == 0);
  auto s1 = skeleton(SimplicialComplex::simplex(5), 1);
  CHECK(s1.facets().size() == 10);
  CHECK(s1.dimension() == 1);
  CHECK(skeleton(SimplicialComplex::simplex(3), 5) == SimplicialComplex::simplex(3));
}

TEST_CASE("joins and deleted joins") {
  auto two_points = SimplicialComplex::from_labels(2, {{1}, {2}});
  auto j = join(two_points, two_points);
  CHECK(j.vertex_count() == 4);
  CHECK(j.facets().size() == 4);
  CHECK(j.dimension() == 1);

  auto point = SimplicialComplex::simplex(1);
  auto dj = deleted_join(point, 2);
  CHECK(dj.vertex_count() == 2);
  CHECK(dj.facets().size() == 2);
  CHECK(dj.dimension() == 0);

  // the 2-fold deleted join of an edge is a 4-cycle
  auto de = deleted_join(SimplicialComplex::simplex(2), 2);
  CHECK(de.facets().size() == 4);
  CHECK(de.euler_characteristic() == 0);

  // faces of the q-fold deleted join of a simplex on n vertices: (q+1)^n
  for (int n = 1; n <= 4; ++n)
    for (int q = 1; q <= 3; ++q) {
      long long expect = 1;
      for (int i = 0; i < n; ++i) expect *= q + 1;
      CHECK(static_cast<long long>(deleted_join_faces(SimplicialComplex::simplex(n), q).size()) == expect);
    }
}

TEST_CASE("barycentric subdivision") {
  auto b1 = barycentric_subdivision(SimplicialComplex::simplex(2));
  CHECK(b1.vertex_count() == 3);
  CHECK(b1.facets().size() == 2);
  auto b2 = barycentric_subdivision(SimplicialComplex::simplex(3));
  CHECK(b2.vertex_count() == 7);
  CHECK(b2.facets().size() == 6);
  CHECK(b2.euler_characteristic() == 1);

  BarycentricChain ok{{{0}, {0, 1}}};
  CHECK_NOTHROW(ok.validate());
  BarycentricChain bad{{{0, 1}, {0}}};
  CHECK_THROWS_AS(bad.validate(), InputError);
  BarycentricChain empty_elem{{{}, {0}}};
  CHECK_THROWS_AS(empty_elem.validate(), InputError);
}

TEST_CASE("sarkaria complexes") {
  auto k1 = sarkaria_complex({1});
  CHECK(k1.vertex_count() == 3);
  CHECK(k1.facets().size() == 3);
  CHECK(k1.dimension() == 0);
  auto k11 = sarkaria_complex({1, 1});
  CHECK(k11.vertex_count() == 6);
  CHECK(k11.facets().size() == 9);
  CHECK(k11.dimension() == 1);
  // f-vector of a join multiplies generating polynomials
  auto k2 = sarkaria_complex({2});
  auto f = k2.f_vector();
  CHECK(f[1] == 5);
  CHECK(f[2] == 10);
  CHECK(f.size() == 3);
}

TEST_CASE("constraint subcomplexes") {
  auto p = VertexPartition::intervals({3, 2});
  CHECK(constraint_subcomplex(p, {3, 2}) == SimplicialComplex::simplex(5));
  auto empty = constraint_subcomplex(p, {0, 0});
  CHECK(empty.dimension() == -1);
  CHECK_FALSE(empty.is_void());
  auto caps11 = constraint_subcomplex(p, {1, 1});
  auto facets = label_facets(caps11);
  CHECK(facets.size() == 6);
  for (const auto& f : facets) {
    CHECK(f.size() == 2);
    CHECK(f[0] <= 3);
    CHECK(f[1] >= 4);
  }
  CHECK_THROWS_AS(constraint_subcomplex(p, {1}), InputError);
}

TEST_CASE("intersection of complexes") {
  auto a = SimplicialComplex::from_labels(3, {{1, 2}, {2, 3}});
  auto b = SimplicialComplex::from_labels(3, {{1, 2, 3}});
  CHECK(label_facets(intersection(a, b)) == label_facets(a));
  auto c = SimplicialComplex::from_labels(3, {{1, 3}});
  CHECK(label_facets(intersection(a, c)) == std::set<std::vector<int>>{{1}, {3}});
}

TEST_CASE("faces and budgets") {
  auto s = SimplicialComplex::simplex(4);
  CHECK(s.faces().size() == 16);
  CHECK(s.contains({0, 2}));
  CHECK_THROWS_AS(s.faces(5), ResourceError);
  CHECK(SimplicialComplex().is_void());
  CHECK(SimplicialComplex::simplex(0).faces().size() == 1);
}
