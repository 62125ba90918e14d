#include "generators.hpp"
#include "hallprim/partition.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace hallprim;

namespace {

// Euler's pentagonal recurrence: p(n) = sum_{k != 0} (-1)^{k+1} p(n - k(3k-1)/2).
std::vector<long> pentagonal_counts(int top) {
  std::vector<long> p(top + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= top; ++n) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      long sign = (k % 2) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

}  // namespace

TEST(Partitions, SmallCases) {
  auto zero = partitions_of(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
  auto three = partitions_of(3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0], Partition({3}));
  EXPECT_EQ(three[1], Partition({2, 1}));
  EXPECT_EQ(three[2], Partition({1, 1, 1}));
}

TEST(Partitions, CountsMatchPentagonalRecurrence) {
  auto p = pentagonal_counts(15);
  EXPECT_EQ(p[8], 22);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(static_cast<long>(partitions_of(n).size()), p[n]) << n;
}

TEST(Partitions, NoDuplicatesCorrectWeightSortedOrder) {
  for (int n = 0; n <= 10; ++n) {
    auto all = partitions_of(n);
    std::set<std::vector<int>> seen;
    for (const auto& l : all) {
      EXPECT_EQ(l.weight(), n);
      EXPECT_TRUE(seen.insert(l.parts()).second);
    }
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Partitions, Statistics) {
  EXPECT_EQ(Partition({5}).n_stat(), 0);
  EXPECT_EQ(Partition({1, 1, 1}).n_stat(), 3);
  EXPECT_EQ(Partition({2, 1, 1}).multiplicity(1), 2);
  EXPECT_EQ(Partition({3, 2, 2}).length(), 3);
  EXPECT_EQ(Partition({3, 2, 2}).weight(), 7);
  EXPECT_EQ(Partition({2, 2, 1}).zee(), 8);
}

TEST(Partitions, TextSyntax) {
  EXPECT_EQ(Partition::parse("2,1,1"), Partition({2, 1, 1}));
  EXPECT_EQ(Partition::parse("0"), Partition());
  EXPECT_EQ(Partition().to_string(), "0");
  EXPECT_EQ(Partition({3, 1}).to_string(), "3,1");
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(Compositions, Examples) {
  auto c = compositions_of(3, 2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (Composition{1, 2}));
  EXPECT_EQ(c[1], (Composition{2, 1}));
  EXPECT_EQ(compositions_of(4, 1), (std::vector<Composition>{{4}}));
  EXPECT_EQ(compositions_of(6, 3).size(), 10u);
}

TEST(Compositions, CountIsBinomial) {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto all = compositions_of(n, k);
      EXPECT_EQ(BigInt(all.size()), binomial(n - 1, k - 1));
      for (const auto& c : all) {
        EXPECT_EQ(static_cast<int>(c.size()), k);
        int s = 0;
        for (int x : c) {
          EXPECT_GE(x, 1);
          s += x;
        }
        EXPECT_EQ(s, n);
      }
    }
  }
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(multinomial(2, {2, 0}), 1);
  EXPECT_EQ(multinomial(2, {1, 1}), 2);
  EXPECT_EQ(multinomial(3, {3}), 1);
  EXPECT_EQ(multinomial(5, {2, 2, 1}), 30);
  EXPECT_THROW(multinomial(3, {1, 1}), std::invalid_argument);
}

TEST(CompositionCount, Examples) {
  EXPECT_EQ(composition_count_g({2}, 1), 1);
  EXPECT_EQ(composition_count_g({1, 1, 0}, 2), 1);
  EXPECT_THROW(composition_count_g({1, 0}, 2), std::invalid_argument);
}

TEST(CompositionCount, MatchesEnumeration) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::map<std::pair<std::vector<int>, int>, long> tally;
      for (const auto& c : compositions_of(n, k)) {
        std::vector<int> r(n, 0);
        for (int x : c) ++r[x - 1];
        ++tally[{r, c.back()}];
      }
      for (const auto& [key, count] : tally) EXPECT_EQ(composition_count_g(key.first, key.second), count);
    }
  }
}

TEST(CompositionCount, EqualsShareOfMultinomial) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto r = lambda.multiplicities();
      int k = lambda.length();
      for (size_t l = 0; l < r.size(); ++l) {
        if (r[l] == 0) continue;
        BigRational expected = BigRational(r[l], k) * BigRational(multinomial(k, r));
        expected.canonicalize();
        EXPECT_EQ(BigRational(composition_count_g(r, static_cast<int>(l) + 1)), expected);
      }
    }
  }
}

TEST(PartitionsProperty, DominanceIsAPartialOrderCompatibleWithSorting) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    int n = testgen::uniform(rng, 1, 8);
    auto all = partitions_of(n);
    const auto& a = all[testgen::uniform(rng, 0, static_cast<int>(all.size()) - 1)];
    const auto& b = all[testgen::uniform(rng, 0, static_cast<int>(all.size()) - 1)];
    EXPECT_TRUE(dominates(a, a));
    if (dominates(a, b) && dominates(b, a)) EXPECT_EQ(a, b);
    // Dominance refines reverse lexicographic order.
    if (dominates(a, b) && !(a == b)) EXPECT_LT(a, b);
  }
}
