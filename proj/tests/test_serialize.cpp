#include "generators.hpp"
#include "hallprim/hall_littlewood.hpp"
#include "hallprim/serialize.hpp"

#include <gtest/gtest.h>

using namespace hallprim;

TEST(Json, SymFuncRoundTrip) {
  for (int n = 1; n <= 5; ++n) {
    SymFunc x = c_in_p(n);
    EXPECT_EQ(symfunc_from_json(nlohmann::json::parse(to_json(x).dump())), x);
    SymFunc hl = hall_littlewood_P(partitions_of(n).back());
    EXPECT_EQ(symfunc_from_json(to_json(hl)), hl);
  }
}

TEST(Json, CExprRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    CExpr x = p_from_c_closed(n);
    EXPECT_EQ(cexpr_from_json(nlohmann::json::parse(to_json(x).dump())), x);
  }
}

TEST(Json, HallElemRoundTrip) {
  for (int n = 1; n <= 5; ++n) {
    HallElem x = primitive_center(n);
    EXPECT_EQ(hall_elem_from_json(nlohmann::json::parse(to_json(x).dump())), x);
  }
}

TEST(Json, NumHallElemRoundTrip) {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    NumHallElem x = z_r_numeric(m, r, 2);
    auto j = to_json(x);
    EXPECT_EQ(j["m"], m);
    EXPECT_EQ(j["q"], 2);
    EXPECT_EQ(num_hall_elem_from_json(nlohmann::json::parse(j.dump())), x);
  }
  NumHallElem odd(2, 3);
  odd.add(CyclicIsoClass::parse("m=2: [0;1]"), make_rational(-1, 4), 1);
  EXPECT_EQ(num_hall_elem_from_json(to_json(odd)), odd);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(symfunc_from_json(nlohmann::json::parse(R"({"type":"SymFunc"})")), std::invalid_argument);
  EXPECT_THROW(cexpr_from_json(to_json(c_in_p(2))), std::invalid_argument);
  EXPECT_THROW(num_hall_elem_from_json(nlohmann::json::parse(R"({"type":"NumHallElem","m":2,"q":2,"terms":[{"class":"[9;1]","coeff":"1","v_exp":0}]})")),
               std::invalid_argument);
}

TEST(Latex, NonEmpty) {
  EXPECT_FALSE(to_latex(primitive_center(2)).empty());
  EXPECT_FALSE(to_latex(z_r_numeric(2, 1, 2)).empty());
}
