#include "generators.hpp"
#include "hallprim/halfpower.hpp"
#include "hallprim/ratfunc.hpp"

#include <gtest/gtest.h>

using namespace hallprim;

namespace {

RatFunc q_poly(std::vector<long> c) {
  std::vector<BigRational> r(c.begin(), c.end());
  return RatFunc(Poly(r), Var::q);
}
RatFunc t_poly(std::vector<long> c) {
  std::vector<BigRational> r(c.begin(), c.end());
  return RatFunc(Poly(r), Var::t);
}

}  // namespace

TEST(BigRational, CanonicalAfterConstruction) {
  BigRational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
}

TEST(RatFunc, CancelsCommonFactor) {
  RatFunc a = RatFunc(1, Var::t) / t_poly({1, -1});
  EXPECT_EQ(a * t_poly({1, 0, -1}), t_poly({1, 1}));
}

TEST(RatFunc, AdditiveIdentityAndSelfDifference) {
  RatFunc x = q_poly({1, 1}) / q_poly({-1, 1});
  EXPECT_EQ(x + RatFunc(Var::q), x);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(RatFunc, DenominatorIsMonicAndReduced) {
  RatFunc x(Poly({BigRational(2), BigRational(2)}), Poly({BigRational(0), BigRational(4), BigRational(4)}), Var::q);
  EXPECT_EQ(x.den(), Poly({BigRational(0), BigRational(1)}));
  EXPECT_EQ(x.num(), Poly(make_rational(1, 2)));
}

TEST(RatFunc, DivisionByZeroThrows) {
  EXPECT_THROW(RatFunc(1, Var::q) / RatFunc(Var::q), std::domain_error);
}

TEST(RatFunc, MixedVariablesThrow) {
  EXPECT_THROW(RatFunc::variable(Var::t) + RatFunc::variable(Var::q), std::invalid_argument);
}

TEST(RatFunc, Evaluation) {
  EXPECT_EQ(RatFunc::one_minus_power(-1, Var::q).eval(2), make_rational(1, 2));
  EXPECT_EQ(q_poly({1, 1}).eval(2), 3);
  EXPECT_EQ((RatFunc(1, Var::q) / RatFunc::one_minus_power(-2, Var::q)).eval(2), make_rational(4, 3));
}

TEST(RatFunc, EvaluationAtPoleNamesTheValue) {
  RatFunc f = RatFunc(1, Var::q) / q_poly({-2, 1});
  try {
    f.eval(2);
    FAIL() << "expected a pole error";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(RatFunc, SubstituteTByNegativePowerOfQ) {
  EXPECT_EQ(t_poly({1, -1}).substitute_t_to_q_power(1), q_poly({-1, 1}) / RatFunc::variable(Var::q));
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      EXPECT_EQ(RatFunc::one_minus_power(n, Var::t).substitute_t_to_q_power(m), RatFunc::one_minus_power(-m * n, Var::q));
    }
  }
  EXPECT_EQ(RatFunc::variable(Var::t).substitute_t_to_q_power(2), RatFunc::monomial(1, -2, Var::q));
}

TEST(RatFunc, SubstitutionCommutesWithEvaluation) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    RatFunc f = testgen::small_ratfunc(rng, Var::t);
    int m = testgen::uniform(rng, 1, 3);
    BigRational qv(testgen::uniform(rng, 2, 7));
    BigRational tv = pow(qv, -m);
    BigRational direct, substituted;
    try {
      direct = f.eval(tv);
    } catch (const std::domain_error&) {
      continue;
    }
    substituted = f.substitute_t_to_q_power(m).eval(qv);
    EXPECT_EQ(direct, substituted) << f.to_string();
  }
}

TEST(RatFunc, CanonicalRendering) {
  EXPECT_EQ((q_poly({-1, 0, 1}) / RatFunc::variable(Var::q)).to_string(), "(q^2 - 1)/(q)");
  EXPECT_EQ(q_poly({1, 1}).to_string(), "q + 1");
  EXPECT_EQ(q_poly({1, -1}).to_compact_string(), "1-q");
  EXPECT_EQ(coefficient_prefix(q_poly({0, 1})), "q");
  EXPECT_EQ(coefficient_prefix(RatFunc(-1, Var::q)), "-");
}

TEST(RatFunc, ParseRoundTrip) {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    RatFunc f = testgen::small_ratfunc(rng, Var::q);
    EXPECT_EQ(parse_ratfunc(f.to_string(), Var::q), f) << f.to_string();
  }
}

TEST(RatFuncProperty, QuotientTimesInverseIsOne) {
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    RatFunc a(testgen::nonzero_poly(rng, 4), Var::t);
    RatFunc b(testgen::nonzero_poly(rng, 4), Var::t);
    EXPECT_TRUE(((a / b) * (b / a)).is_one());
  }
}

TEST(RatFuncProperty, NormalizationIsIdempotent) {
  std::mt19937 rng(2);
  for (int i = 0; i < 100; ++i) {
    RatFunc f = testgen::small_ratfunc(rng, Var::t);
    RatFunc again(f.num(), f.den(), Var::t);
    EXPECT_EQ(again.num(), f.num());
    EXPECT_EQ(again.den(), f.den());
  }
}

TEST(RatFuncProperty, EvaluationIsARingHomomorphism) {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 100) {
    RatFunc f = testgen::small_ratfunc(rng, Var::q);
    RatFunc g = testgen::small_ratfunc(rng, Var::q);
    BigRational x = testgen::small_rational(rng);
    try {
      BigRational fx = f.eval(x), gx = g.eval(x);
      EXPECT_EQ((f * g).eval(x), fx * gx);
      EXPECT_EQ((f + g).eval(x), fx + gx);
      ++checked;
    } catch (const std::domain_error&) {
    }
  }
}

TEST(RatFuncProperty, RingAxioms) {
  std::mt19937 rng(4);
  for (int i = 0; i < 60; ++i) {
    RatFunc a = testgen::small_ratfunc(rng, Var::t);
    RatFunc b = testgen::small_ratfunc(rng, Var::t);
    RatFunc c = testgen::small_ratfunc(rng, Var::t);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(HalfPower, ExponentsAdd) {
  HalfPower a{3, 1}, b{make_rational(1, 2), 3};
  HalfPower p = a * b;
  EXPECT_EQ(p.v_exp, 4);
  EXPECT_EQ(p.scalar, make_rational(3, 2));
  EXPECT_EQ(p.at(2), 6);
  EXPECT_EQ(*p.to_ratfunc(), RatFunc::monomial(make_rational(3, 2), 2, Var::q));
}

TEST(HalfPower, OddExponentHasNoRationalValue) {
  HalfPower a{1, 3};
  EXPECT_FALSE(a.has_integral_q_power());
  EXPECT_FALSE(a.to_ratfunc().has_value());
  EXPECT_THROW(a.at(2), std::domain_error);
  HalfPower neg{1, -2};
  EXPECT_EQ(neg.at(3), make_rational(1, 3));
}
