#include <doctest.h>

#include "fairsplit/composition.hpp"
#include "fairsplit/errors.hpp"

using namespace fairsplit;

namespace {

void check_almost_fair(const Splitting& sp, const VertexPartition& p, int stability) {
  int q = sp.q();
  VertexSet seen;
  for (auto s : sp.sets) {
    CHECK(s.disjoint(seen));
    seen |= s;
    int prev = -1000;
    s.for_each([&](int v) {
      CHECK(v - prev >= stability);
      prev = v;
    });
  }
  for (auto b : p.blocks()) {
    int quota = std::max(0, (b.size() + 1) / q - 1);
    for (auto s : sp.sets) CHECK((s & b).size() >= quota);
    CHECK((b - seen).size() <= q - 1);
  }
}

}  // namespace

TEST_CASE("floor identity") {
  CHECK(floor_identity_check(7, 2, 2));
  CHECK(floor_identity_check(0, 3, 5));
  for (long long a = 0; a <= 500; ++a)
    for (long long b = 1; b <= 10; ++b)
      for (long long c = 1; c <= 10; ++c) REQUIRE(floor_identity_check(a, b, c));
}

TEST_CASE("four sets on a 31-vertex path") {
  auto p = VertexPartition::whole(31);
  auto two = exhaustive_path_splitter(2, 2);
  auto r = compose(31, p, two, two);
  CHECK(r.splitting.q() == 4);
  CHECK(r.stability == 4);
  CHECK(r.certificate.almost_fair_ok);
  for (auto s : r.splitting.sets) CHECK((s & p.block(0)).size() >= 7);
  check_almost_fair(r.splitting, p, 4);
}

TEST_CASE("power of two pipeline") {
  auto p1 = VertexPartition::whole(31);
  auto t1 = power_of_two_splitting(31, p1, 1);
  CHECK(t1.splitting.q() == 2);
  CHECK(t1.splitting == exhaustive_path_splitter(2, 2).run(31, p1));

  auto t2 = power_of_two_splitting(31, p1, 2);
  CHECK(t2.splitting.q() == 4);
  check_almost_fair(t2.splitting, p1, 4);

  auto p2 = VertexPartition::intervals({16, 15});
  auto r = power_of_two_splitting(31, p2, 2);
  for (int i = 0; i < 4; ++i) {
    CHECK(r.certificate.counts[i][0] >= 3);
    CHECK(r.certificate.counts[i][1] >= 3);
  }
  CHECK(r.certificate.almost_quota == std::vector<int>{3, 3});
  check_almost_fair(r.splitting, p2, 4);
}

TEST_CASE("identity as the second stage") {
  auto p = VertexPartition::intervals({5, 6});
  auto two = exhaustive_path_splitter(2, 2);
  auto r = compose(11, p, two, identity_splitter());
  CHECK(r.splitting == two.run(11, p));
  auto id = identity_splitter();
  CHECK(id.q == 1);
  CHECK(id.run(4, VertexPartition::whole(4)).sets == std::vector<VertexSet>{VertexSet::range(4)});
}

TEST_CASE("weakly stable first stage") {
  auto p = VertexPartition::whole(9);
  auto weak = exhaustive_path_splitter(2, 1, true);
  CHECK(weak.w == 2);
  auto r = compose(9, p, weak, exhaustive_path_splitter(2, 2));
  CHECK(r.weak_stability == 2);
  check_almost_fair(r.splitting, p, 2);
}

TEST_CASE("composed splitters nest") {
  auto two = exhaustive_path_splitter(2, 2);
  auto four = compose_splitters(two, two);
  CHECK(four.q == 4);
  CHECK(four.s == 4);
  auto p = VertexPartition::whole(15);
  auto sp = four.run(15, p);
  CHECK(sp.q() == 4);
  check_almost_fair(sp, p, 4);
}

TEST_CASE("a misbehaving base splitter is caught") {
  BaseSplitter liar;
  liar.q = 2;
  liar.s = 2;
  liar.name = "liar";
  liar.run = [](int n, const VertexPartition&) { return Splitting{{VertexSet{1, 2}, VertexSet::range(n) - VertexSet{1, 2}}}; };
  CHECK_THROWS_AS(compose(9, VertexPartition::whole(9), liar, identity_splitter()), ContractError);
  try {
    compose(9, VertexPartition::whole(9), liar, identity_splitter());
  } catch (const ContractError& e) {
    CHECK(std::string(e.what()).find("liar") != std::string::npos);
  }
}
