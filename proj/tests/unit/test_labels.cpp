#include "cdt/error.hpp"
#include "cdt/labels.hpp"
#include "doctest.h"

using namespace cdt;

TEST_CASE("digit scheme") {
  const auto s = LabeledVertexScheme::digits(18);
  CHECK(s.parse("a") == 10);
  CHECK(s.parse("h") == 17);
  CHECK(s.parse("3", std::nullopt, 6) == 9);
  CHECK(s.parse("h", std::nullopt, 1) == 0);
  CHECK(s.name(11) == "b");
  CHECK(s.parse_sequence("(0123)") == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_THROWS_AS(s.parse("12"), InvalidInput);
  CHECK_THROWS_AS(s.parse_sequence("0123"), InvalidInput);
}

TEST_CASE("letter scheme") {
  const auto s = LabeledVertexScheme::letters("uvtz", 7);
  CHECK(s.size() == 28);
  CHECK(s.parse("u_3") == 3);
  CHECK(s.parse("z_{x+1}", 6) == 21);
  CHECK(s.name(8) == "v_1");
  CHECK(s.parse_sequence("(u_0 v_1 t_2)") == std::vector<Vertex>{0, 8, 16});
  CHECK_THROWS_AS(s.parse("w_0"), InvalidInput);
  CHECK_THROWS_AS(s.parse("u_{x}"), InvalidInput);
}

TEST_CASE("block scheme") {
  const auto s = LabeledVertexScheme::blocks(5, 4);
  CHECK(s.parse("(x+2)_0", 4) == 4);
  CHECK(s.parse("3_3") == 15);
  CHECK(s.parse("1_0", std::nullopt, 2) == 12);
  CHECK_THROWS_AS(s.parse("1_4"), InvalidInput);
  const auto hex = LabeledVertexScheme::blocks(15, 6, 15);
  CHECK(hex.parse("e_5") == 89);
  CHECK(hex.name(89) == "e_5");
}

TEST_CASE("index expressions") {
  CHECK(evaluate_index("x+2", 3) == 5);
  CHECK(evaluate_index("{x-1}", 0) == -1);
  CHECK(evaluate_index("b", std::nullopt, 15) == 11);
  CHECK_THROWS_AS(evaluate_index("x+", 1), InvalidInput);
  CHECK_THROWS_AS(evaluate_index("", 1), InvalidInput);
}
