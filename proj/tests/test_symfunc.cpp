#include "generators.hpp"
#include "hallprim/hall_littlewood.hpp"
#include "hallprim/symfunc.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace hallprim;

namespace {

RatFunc tc(const BigRational& c) { return RatFunc(c, Var::t); }
RatFunc tpoly(std::vector<long> c) {
  std::vector<BigRational> r(c.begin(), c.end());
  return RatFunc(Poly(r), Var::t);
}
RatFunc one_minus_t(long k) { return RatFunc::one_minus_power(k, Var::t); }
SymFunc p(std::vector<int> parts) { return power_sum(Partition(parts)); }
CExpr c_mono(std::vector<int> parts) { return CExpr::basis(Partition(parts)); }
SymFunc one() { return sym_constant(RatFunc(1, Var::t)); }

// Independent expansions through the power-sum inner product normalizer.
SymFunc h_oracle(int n) {
  SymFunc r;
  for (const auto& l : partitions_of(n)) r.add(l, tc(BigRational(1) / BigRational(l.zee())));
  return r;
}
SymFunc e_oracle(int n) {
  SymFunc r;
  for (const auto& l : partitions_of(n)) {
    BigRational c = BigRational(1) / BigRational(l.zee());
    if ((n - l.length()) % 2) c = -c;
    r.add(l, tc(c));
  }
  return r;
}

// Value of x at finitely many variables xs and a numeric t.
BigRational evaluate(const SymFunc& x, const std::vector<BigRational>& xs, const BigRational& t) {
  BigRational total = 0;
  for (const auto& [lambda, c] : x) {
    BigRational term = c.eval(t);
    for (int part : lambda.parts()) {
      BigRational s = 0;
      for (const auto& v : xs) s += pow(v, part);
      term *= s;
    }
    total += term;
  }
  return total;
}

// P_lambda(x_1..x_n; t) by symmetrizing x^lambda prod_{i<j} (x_i - t x_j)/(x_i - x_j).
BigRational hall_littlewood_by_symmetrization(const Partition& lambda, const std::vector<BigRational>& xs, const BigRational& t) {
  const int n = static_cast<int>(xs.size());
  std::vector<int> exps(n, 0);
  for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda[i];
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigRational sum = 0;
  do {
    BigRational term = 1;
    for (int i = 0; i < n; ++i) term *= pow(xs[perm[i]], exps[i]);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) term *= (xs[perm[i]] - t * xs[perm[j]]) / (xs[perm[i]] - xs[perm[j]]);
    }
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  // v_lambda(t) = prod_{i >= 0} prod_{j=1}^{m_i} (1 + t + ... + t^{j-1}), m_0 = n - l(lambda).
  auto mult = lambda.multiplicities();
  mult.push_back(n - lambda.length());
  BigRational v = 1;
  for (int m : mult) {
    for (int j = 1; j <= m; ++j) {
      BigRational bracket = 0;
      for (int k = 0; k < j; ++k) bracket += pow(t, k);
      v *= bracket;
    }
  }
  return sum / v;
}

// Schur function by Jacobi-Trudi det(h_{lambda_i - i + j}), Laplace expansion.
SymFunc det(const std::vector<std::vector<SymFunc>>& a) {
  const size_t n = a.size();
  if (n == 0) return one();
  if (n == 1) return a[0][0];
  SymFunc r;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<SymFunc>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<SymFunc> row;
      for (size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    SymFunc term = a[0][j] * det(minor);
    if (j % 2) term = -term;
    r += term;
  }
  return r;
}
SymFunc schur(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<std::vector<SymFunc>> m(l, std::vector<SymFunc>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      int k = lambda[i] - i + j;
      m[i][j] = k < 0 ? SymFunc() : (k == 0 ? one() : h_oracle(k));
    }
  }
  return det(m);
}

}  // namespace

TEST(CInP, SmallCases) {
  EXPECT_EQ(c_in_p(0), one());
  EXPECT_EQ(c_in_p(1), p({1}).scaled(one_minus_t(1)));
  SymFunc c2 = p({2}).scaled(one_minus_t(2).scaled(make_rational(1, 2))) +
               p({1, 1}).scaled((one_minus_t(1) * one_minus_t(1)).scaled(make_rational(1, 2)));
  EXPECT_EQ(c_in_p(2), c2);
}

TEST(CInP, MatchesGeneratingFunctionQuotient) {
  // H(T)/H(tT) = H(T) E(-tT): c_n = sum_k (-t)^k e_k h_{n-k}.
  for (int n = 1; n <= 7; ++n) {
    SymFunc expected;
    for (int k = 0; k <= n; ++k) {
      SymFunc ek = k == 0 ? one() : e_oracle(k);
      SymFunc hk = n - k == 0 ? one() : h_oracle(n - k);
      expected += (ek * hk).scaled(RatFunc::monomial(k % 2 ? -1 : 1, k, Var::t));
    }
    EXPECT_EQ(c_in_p(n), expected) << n;
  }
}

TEST(PFromC, ClosedFormExamples) {
  EXPECT_EQ(p_from_c_closed(1), c_mono({1}).scaled(RatFunc(1, Var::t) / one_minus_t(1)));
  CExpr p2 = (c_mono({2}) - c_mono({1, 1}).scaled(tc(make_rational(1, 2)))).scaled(RatFunc(2, Var::t) / one_minus_t(2));
  EXPECT_EQ(p_from_c_closed(2), p2);
  CExpr p3 = (c_mono({3}) - c_mono({2, 1}) + c_mono({1, 1, 1}).scaled(tc(make_rational(1, 3))))
                 .scaled(RatFunc(3, Var::t) / one_minus_t(3));
  EXPECT_EQ(p_from_c_closed(3), p3);
}

TEST(PFromC, CompositionsExample) {
  CExpr p2 = (c_mono({2}).scaled(tc(2)) - c_mono({1, 1})).scaled(RatFunc(1, Var::t) / one_minus_t(2));
  EXPECT_EQ(p_from_c_compositions(2), p2);
  EXPECT_EQ(p_from_c_compositions(1), p_from_c_closed(1));
}

TEST(PFromC, AllRoutesAgree) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(p_from_c_compositions(n), p_from_c_closed(n)) << n;
    EXPECT_EQ(p_from_c_collected(n), p_from_c_closed(n)) << n;
  }
}

TEST(PFromC, ExpandsToPowerSum) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(cexpr_to_p(p_from_c_closed(n)), p({n})) << n;
}

TEST(BasisChange, RoundTrips) {
  EXPECT_EQ(p_to_cexpr(cexpr_to_p(c_mono({2, 1}))), c_mono({2, 1}));
  EXPECT_EQ(p_to_cexpr(one()), CExpr::basis(Partition()));
  EXPECT_EQ(cexpr_to_p(CExpr::basis(Partition())), one());
  std::mt19937 rng(21);
  for (int i = 0; i < 20; ++i) {
    Partition l = testgen::partition(rng, 1, 5);
    SymFunc x = p(l.parts()).scaled(testgen::small_ratfunc(rng, Var::t));
    if (x.is_zero()) continue;
    EXPECT_EQ(cexpr_to_p(p_to_cexpr(x)), x);
  }
}

TEST(HInP, MatchesZeeExpansion) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(h_in_p(n), h_oracle(n));
}

TEST(Hopf, SmallExamples) {
  EXPECT_EQ(h_in_p(1), p({1}));
  EXPECT_EQ(h_in_p(2), p({2}).scaled(tc(make_rational(1, 2))) + p({1, 1}).scaled(tc(make_rational(1, 2))));
  SymTensor d;
  d.add({Partition({1, 1}), Partition()}, RatFunc(1, Var::t));
  d.add({Partition({1}), Partition({1})}, RatFunc(2, Var::t));
  d.add({Partition(), Partition({1, 1})}, RatFunc(1, Var::t));
  EXPECT_EQ(coproduct(p({1, 1})), d);
  SymTensor unit;
  unit.add({Partition(), Partition()}, RatFunc(1, Var::t));
  EXPECT_EQ(coproduct(one()), unit);
  EXPECT_EQ(counit(p({2}) + one().scaled(tc(5))), tc(5));
  EXPECT_EQ(antipode(p({2, 1})), p({2, 1}));
  EXPECT_EQ(hall_littlewood_P(Partition({1})), p({1}));
  EXPECT_EQ(macdonald_primitive(1), p({1}));
}

TEST(Hopf, CoproductCounitAntipode) {
  for (int n = 1; n <= 5; ++n) {
    SymTensor expected;
    expected.add({Partition({n}), Partition()}, RatFunc(1, Var::t));
    expected.add({Partition(), Partition({n})}, RatFunc(1, Var::t));
    EXPECT_EQ(coproduct(p({n})), expected);
    EXPECT_TRUE(counit(p({n})).is_zero());
    EXPECT_EQ(antipode(p({n})), -p({n}));
  }
  EXPECT_TRUE(counit(one()).is_one());
  // Delta h_n = sum_k h_k (x) h_{n-k}
  for (int n = 1; n <= 4; ++n) {
    SymTensor expected;
    for (int k = 0; k <= n; ++k) {
      SymFunc a = k == 0 ? one() : h_oracle(k);
      SymFunc b = n - k == 0 ? one() : h_oracle(n - k);
      for (const auto& [la, ca] : a) {
        for (const auto& [lb, cb] : b) expected.add({la, lb}, ca * cb);
      }
    }
    EXPECT_EQ(coproduct(h_oracle(n)), expected);
    SymFunc en = e_oracle(n);
    EXPECT_EQ(antipode(h_oracle(n)), n % 2 ? -en : en);
  }
}

TEST(HopfProperty, CounitAndAntipodeAxioms) {
  std::mt19937 rng(31);
  for (int i = 0; i < 25; ++i) {
    SymFunc x = p(testgen::partition(rng, 1, 5).parts()) + p(testgen::partition(rng, 1, 5).parts());
    SymTensor d = coproduct(x);
    EXPECT_EQ(counit_left(d), x);
    EXPECT_EQ(counit_right(d), x);
  }
}

TEST(HallLittlewood, OneColumnIsElementary) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(hall_littlewood_P(Partition(std::vector<int>(n, 1))), e_oracle(n));
}

TEST(HallLittlewood, OneRowIsCompleteOverOneMinusT) {
  // Q_(n) = (1-t) P_(n) has generating function prod (1 - t x_i T)/(1 - x_i T), same as c_n.
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(hall_littlewood_P(Partition({n})).scaled(one_minus_t(1)), c_in_p(n));
}

TEST(HallLittlewood, AtTZeroIsSchur) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) EXPECT_EQ(specialize_t(hall_littlewood_P(l), 0), specialize_t(schur(l), 0)) << l.to_string();
  }
}

TEST(HallLittlewood, AtTOneIsMonomial) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      SymFunc at_one = specialize_t(hall_littlewood_P(l), 1);
      // Evaluate at distinct rationals; m_lambda is the sum over distinct rearrangements.
      std::vector<BigRational> xs;
      for (int i = 0; i < n; ++i) xs.push_back(make_rational(i + 2, i + 1));
      std::vector<int> exps(n, 0);
      for (int i = 0; i < l.length(); ++i) exps[i] = l[i];
      std::sort(exps.begin(), exps.end());
      BigRational m = 0;
      do {
        BigRational term = 1;
        for (int i = 0; i < n; ++i) term *= pow(xs[i], exps[i]);
        m += term;
      } while (std::next_permutation(exps.begin(), exps.end()));
      EXPECT_EQ(evaluate(at_one, xs, 0), m) << l.to_string();
    }
  }
}

TEST(HallLittlewood, MatchesSymmetrizationAtRationalPoints) {
  std::mt19937 rng(41);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (int trial = 0; trial < 2; ++trial) {
        std::vector<BigRational> xs;
        for (int i = 0; i < n; ++i) xs.push_back(make_rational(testgen::uniform(rng, 1, 40) * (n + 1) + i, testgen::uniform(rng, 1, 7)));
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) continue;
        BigRational t = make_rational(testgen::uniform(rng, -5, 5), testgen::uniform(rng, 2, 9));
        if (abs(t) == 1) continue;
        EXPECT_EQ(evaluate(hall_littlewood_P(l), xs, t), hall_littlewood_by_symmetrization(l, xs, t)) << l.to_string();
      }
    }
  }
}

TEST(HallLittlewood, OrthogonalWithKnownNorms) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        RatFunc ip = hall_inner_product(hall_littlewood_P(l), hall_littlewood_P(mu));
        if (!(l == mu)) {
          EXPECT_TRUE(ip.is_zero()) << l.to_string() << " " << mu.to_string();
          continue;
        }
        // <P_l, P_l> = 1 / b_l(t), b_l = prod_i phi_{m_i}(t), phi_m = (1-t)...(1-t^m).
        RatFunc b(1, Var::t);
        for (int m : l.multiplicities()) {
          for (int j = 1; j <= m; ++j) b *= one_minus_t(j);
        }
        EXPECT_EQ(ip * b, RatFunc(1, Var::t)) << l.to_string();
      }
    }
  }
}

TEST(HallLittlewood, DegreeCapIsEnforced) {
  EXPECT_THROW(hall_littlewood_P(Partition({3, 2}), 4), std::invalid_argument);
}

TEST(Macdonald, ExpansionIsPowerSum) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(macdonald_primitive(n), p({n})) << n;
}

TEST(Macdonald, ExpandInPRecoversCoefficients) {
  for (int n = 1; n <= 5; ++n) {
    auto coeffs = expand_in_P(p({n}));
    for (const auto& l : partitions_of(n)) {
      RatFunc c = RatFunc::monomial(1, l.n_stat(), Var::t);
      for (int i = 1; i < l.length(); ++i) c *= one_minus_t(-i);
      EXPECT_EQ(coeffs.at(l), c) << l.to_string();
    }
  }
}

TEST(Rendering, PowerSumText) {
  EXPECT_EQ(to_string(c_in_p(1)), "(1-t)p[1]");
  EXPECT_EQ(to_string(one()), "1");
  EXPECT_EQ(to_string(SymFunc()), "0");
}
