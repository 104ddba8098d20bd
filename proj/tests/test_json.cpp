#include <doctest.h>

#include "json_io.hpp"

using namespace dsring;
using nlohmann::json;

TEST_CASE("coefficient encodings") {
  CHECK(coeff_to_json(Coeff::integer(-3)) == json(-3));
  auto q = Coeff::one_minus_q() * Coeff::monomial(Base::Q, 1, 1);
  CHECK(coeff_to_json(q) == json::parse(R"({"var":"q","terms":[[1,1],[2,-1]]})"));
  CHECK(coeff_to_json(Coeff::monomial(Base::T, 2, 1)) == json::parse(R"({"var":"t","terms":[[2,1]]})"));
  CHECK(coeff_from_json(coeff_to_json(q), Base::Q) == q);
  CHECK(coeff_from_json(json(5), Base::Z) == Coeff::integer(5));
  CHECK(coeff_from_json(json("7"), Base::Z) == Coeff::integer(7));
  CHECK_THROWS(coeff_from_json(coeff_to_json(q), Base::T));
}

TEST_CASE("partition encoding") {
  BoxedPartition p({1, 1}, 2, 2);
  CHECK(partition_to_json(p) == json::parse(R"({"parts":[1,1],"box":[2,2]})"));
  CHECK(partition_from_json(partition_to_json(p)) == p);
  CHECK_THROWS(partition_from_json(json::parse(R"({"parts":[3],"box":[1,2]})")));
}

TEST_CASE("expansion encoding is canonical") {
  auto e = expand(BoxedPartition({1, 1}, 2, 2), BoxedPartition({1, 0}, 2, 1), Mode::H);
  auto j = expansion_to_json(e);
  const char* expected = R"({
    "ring": "H",
    "lambda": {"parts": [1, 1], "box": [2, 2]},
    "mu": {"parts": [1, 0], "box": [2, 1]},
    "terms": [
      {"nu": {"parts": [1, 1, 1, 0], "box": [4, 3]}, "coeff": 1},
      {"nu": {"parts": [2, 1, 0, 0], "box": [4, 3]}, "coeff": 1}
    ]})";
  CHECK(j == json::parse(expected));
  CHECK(j.dump() == expansion_to_json(expand(BoxedPartition({1, 1}, 2, 2), BoxedPartition({1, 0}, 2, 1), Mode::H)).dump());
}

TEST_CASE("dream encoding") {
  auto r = build_region(BoxedPartition({1, 1}, 2, 2), BoxedPartition({1, 0}, 2, 1));
  auto d = enumerate_dreams(r, Mode::H).front();
  auto j = dream_to_json(d);
  CHECK(j.at("cells").size() == static_cast<std::size_t>(r.cell_count()));
  CHECK(j.at("north") == d.north);
  CHECK(j.at("E") == 0);
  CHECK(j.at("cells").at(0) == json::parse(R"j({"col":2,"row":1,"tile":"DOT(R)"})j"));
}

TEST_CASE("pattern encoding") {
  auto j = pattern_to_json(pattern_from_window({1, 2, 7, 8}));
  CHECK(j.at("window") == json::parse("[1,2,7,8]"));
  CHECK(j.at("n") == 4);
  CHECK(j.at("ball_number") == 2);
}
