#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitk/catalog.hpp"
#include "orbitk/json_io.hpp"
#include "orbitk/kclass.hpp"

using namespace orbitk;

TEST_CASE("matrix json round trip") {
  json j = json::parse(R"({"rows":2,"cols":4,
      "entries":[["1","0","1","1"],["0","1","1","2"]]})");
  RationalMatrix v = matrix_from_json(j);
  CHECK(v.at(1, 3) == 2);
  CHECK(matrix_from_json(matrix_to_json(v)) == v);

  json frac = json::parse(R"({"rows":1,"cols":2,"entries":[["1/3","-7/2"]]})");
  RationalMatrix w = matrix_from_json(frac);
  CHECK(w.at(0, 0) == Rat(1, 3));
  CHECK(w.at(0, 1) == Rat(-7, 2));
  CHECK(matrix_from_json(matrix_to_json(w)) == w);
}

TEST_CASE("matroid json round trip") {
  json j = json::parse(R"({"n":4,"rank":2,"bases":[[1,3],[1,4],[2,3],[2,4],[3,4],[1,2]]})");
  Matroid m = matroid_from_json(j);
  CHECK(m == Matroid::uniform(2, 4));
  CHECK(matroid_from_json(matroid_to_json(m)) == m);

  for (const Matroid& cm : catalog::matroid_catalog(13, 5))
    CHECK(matroid_from_json(matroid_to_json(cm)) == cm);

  json bad = json::parse(R"({"n":4,"rank":1,"bases":[[1,3],[1,4]]})");
  CHECK_THROWS_AS((void)matroid_from_json(bad), Error);
}

TEST_CASE("schur expansion json matches the documented schema") {
  SchurExpansion k = k_uniform_rank2(4);
  json j = schur_to_json(k);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["lambda"] == json::array());
  CHECK(j[0]["t"] == json({0, 0, 0, 0}));
  CHECK(j[0]["coeff"] == "1");
  CHECK(j[1]["lambda"] == json({2, 2}));
  CHECK(j[1]["t"] == json({1, 1, 1, 1}));
  CHECK(j[1]["coeff"] == "-1");
}

TEST_CASE("laurent json") {
  Matroid u12 = Matroid::uniform(1, 2);
  json j = laurent_to_json(u12.multivariate_tutte());
  bool found = false;
  for (const auto& term : j)
    if (term["t"] == json({1, 1}) && term["q"] == -1 && term["coeff"] == "1")
      found = true;
  CHECK(found);
}

TEST_CASE("partition json") {
  Partition p{3, 1};
  CHECK(partition_from_json(partition_to_json(p)) == p);
  CHECK(partition_to_json(Partition{}) == json::array());
}
