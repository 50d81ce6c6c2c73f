#include <doctest.h>

#include "cayleykit/io.hpp"

using namespace cayleykit;

TEST_CASE("polytope documents") {
  Json good = Json::parse(R"({"ambient_dim": 2, "points": [[0,0],[1,2]]})");
  PolytopeDocument doc = polytope_document_from_json(good);
  CHECK(doc.ambient_dim == 2);
  CHECK(doc.points == std::vector<IntVec>{{0, 0}, {1, 2}});
  LatticePolytope p = to_polytope(doc);
  CHECK(p.vertices().size() == 2);

  CHECK_THROWS_AS(polytope_document_from_json(Json::parse(R"({"points": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(polytope_document_from_json(
                      Json::parse(R"({"ambient_dim": 2, "points": [[1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(polytope_document_from_json(
                      Json::parse(R"({"ambient_dim": -1, "points": [[1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(polytope_document_from_json(
                      Json::parse(R"({"ambient_dim": 1, "points": [[0.5]]})")),
                  std::invalid_argument);
}

TEST_CASE("certificate round trip") {
  IntMatrix a(2, 3);
  a(0, 2) = 1;
  a(1, 0) = -1;
  a(1, 1) = 2;
  CayleyStructure s{2, {a, IntVec{Int(0), Int(3)}}, {0, 1, 2, 0}};
  CayleyStructure back = certificate_from_json(certificate_to_json(s));
  CHECK(back == s);

  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"r": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      certificate_from_json(Json::parse(
          R"({"r": 1, "matrix": [[1]], "translation": [0], "labels": [2]})")),
      std::invalid_argument);  // label out of range
  CHECK_THROWS_AS(
      certificate_from_json(Json::parse(
          R"({"r": 2, "matrix": [[1]], "translation": [0, 0], "labels": []})")),
      std::invalid_argument);  // matrix must have r rows
}

TEST_CASE("witness round trip and rational parsing") {
  PlaneWitness w{3,
                 {RatVec{Rat(1, 2), Rat(0), Rat(-3, 4)},
                  RatVec{Rat(5), Rat(-1), Rat(0)}}};
  PlaneWitness back = witness_from_json(witness_to_json(w));
  CHECK(back == w);
  // integers stay plain numbers, proper fractions become strings
  Json j = witness_to_json(w);
  CHECK(j["vectors"][0][0] == "1/2");
  CHECK(j["vectors"][0][2] == "-3/4");
  CHECK(j["vectors"][1][0] == 5);

  PlaneWitness parsed = witness_from_json(
      Json::parse(R"({"N": 2, "vectors": [["2/4", "-1"]]})"));
  CHECK(parsed.vectors[0][0] == Rat(1, 2));  // canonicalized
  CHECK(parsed.vectors[0][1] == Rat(-1));

  CHECK_THROWS_AS(
      witness_from_json(Json::parse(R"({"N": 2, "vectors": [["1/0", 1]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      witness_from_json(Json::parse(R"({"N": 2, "vectors": [["x", 1]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      witness_from_json(Json::parse(R"({"N": 3, "vectors": [[1, 1]]})")),
      std::invalid_argument);
}
