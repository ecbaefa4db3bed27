#include <doctest.h>

#include "fairsplit/errors.hpp"
#include "fairsplit/json_io.hpp"

using namespace fairsplit;

TEST_CASE("rationals") {
  CHECK(rational_to_json(Rational(3)) == Json(3));
  CHECK(rational_to_json(Rational(-1, 3)) == Json("-1/3"));
  CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), InputError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), InputError);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), InputError);
}

TEST_CASE("instance round trip") {
  SplittingSpec spec;
  spec.q = 3;
  spec.balanced = true;
  spec.stability = 2;
  spec.flavor = Flavor::fair;
  auto pb = SearchProblem::on_graph(family::cycle(7), VertexPartition::intervals({3, 4}), spec);
  auto j = problem_to_json(pb);
  CHECK(j["schema"] == schema::instance);
  auto back = problem_from_json(parse_json(j.dump()));
  CHECK(*back.graph == *pb.graph);
  CHECK(back.partition == pb.partition);
  CHECK(back.spec.q == 3);
  CHECK(back.spec.balanced);
  CHECK(back.spec.stability == 2);
  CHECK(back.spec.flavor == Flavor::fair);
  CHECK(problem_to_json(back) == j);
}

TEST_CASE("complex instance and interval partitions") {
  auto j = parse_json(R"({"schema":"fairsplit.instance/1","n":4,
    "complex":{"facets":[[1,2],[3,4],[1,3]]},"intervals":[2,2]})");
  auto pb = problem_from_json(j);
  REQUIRE(pb.complex);
  CHECK(pb.complex->facets().size() == 3);
  CHECK(pb.partition == VertexPartition::intervals({2, 2}));
  auto again = problem_from_json(problem_to_json(pb));
  CHECK(*again.complex == *pb.complex);
}

TEST_CASE("geometric instance keeps its points") {
  auto pb = SearchProblem::on_graph(family::path(4), VertexPartition::whole(4), SplittingSpec{});
  pb.mode = SearchMode::geometric;
  pb.points = moment_curve({1, 2, 3, Rational(9, 2)}, 2);
  auto back = problem_from_json(problem_to_json(pb));
  CHECK(back.mode == SearchMode::geometric);
  CHECK(back.points.points == pb.points.points);
  CHECK(back.points.params == pb.points.params);
  auto mp = points_from_json(parse_json(R"({"moment_params":[0,1,2],"dim":2})"));
  CHECK(mp.points[2] == RationalPoint{2, 4});
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(parse_json("{not json"), InputError);
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"schema":"fairsplit.splitting/1","n":2})")), InputError);
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"n":3,"edges":[[1,4]]})")), InputError);
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"n":3,"partition":[[1,2],[2,3]]})")), InputError);
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"n":"3"})")), InputError);
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"n":3,"mode":5})")), InputError);
  CHECK_THROWS_AS(spec_from_json(parse_json(R"({"flavor":"nearly"})")), InputError);
  CHECK_THROWS_AS(splitting_from_json(parse_json(R"([[1,2],[9]])"), 3), InputError);
}

TEST_CASE("splittings and outcomes") {
  Splitting sp{{{1, 4}, {3, 6}}};
  CHECK(splitting_from_json(splitting_to_json(sp), 6) == sp);
  CHECK(splitting_from_json(parse_json("[[1,4],[3,6]]"), 6) == sp);
  auto pb = SearchProblem::on_graph(family::cycle(6), VertexPartition::intervals({3, 3}), SplittingSpec{});
  auto out = find_splitting(pb);
  auto oj = outcome_to_json(out);
  CHECK(oj["status"] == "found");
  CHECK_FALSE(oj.contains("elapsed_seconds"));
  CHECK(splitting_from_json(oj, 6) == *out.splitting);
}

TEST_CASE("kneser instances") {
  KneserInstance k{6, 2, 2, KneserStability::path};
  auto back = kneser_from_json(kneser_to_json(k));
  CHECK(back.n == 6);
  CHECK(back.k == 2);
  CHECK(back.stability == KneserStability::path);
  CHECK_THROWS_AS(kneser_stability_from_string("sideways"), InputError);
}

TEST_CASE("report serializers are deterministic") {
  auto h = reduced_homology(independence_complex(family::cycle(6)), 2);
  auto hj = homology_to_json(h);
  CHECK(hj["schema"] == schema::homology);
  CHECK(hj.dump() == homology_to_json(h).dump());
  auto cr = check_conditions(family::cycle(6), VertexPartition::intervals({3, 3}), 2);
  CHECK(conditions_to_json(cr).dump() == conditions_to_json(check_conditions(family::cycle(6),
                                                                 VertexPartition::intervals({3, 3}), 2)).dump());
}
