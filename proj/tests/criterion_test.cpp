#include <gtest/gtest.h>

#include <random>

#include "scrollsmith/criterion.hpp"
#include "scrollsmith/enumerator.hpp"

using namespace scrollsmith;

namespace {

ScrollParams P(std::array<int, 4> d, int b1, int b2) { return ScrollParams(d, b1, b2); }

template <class Fn>
void sweep(int d1_max, int b_min, int b_max, Fn fn) {
  for_each_d(d1_max, [&](const std::array<int, 4>& d) {
    for (int b1 = std::max(b_min, -2 * d[0]); b1 <= b_max; ++b1) {
      for (int b2 = b1; b2 <= b_max; ++b2) fn(ScrollParams(d, b1, b2));
    }
  });
}

}  // namespace

TEST(Classify, KnownValues) {
  EXPECT_EQ(classify(P({0, 0, 0, 0}, 0, 1)), Classification(Smooth{CaseId::C1}));
  EXPECT_EQ(classify(P({2, 1, 1, 1}, -2, -1)), Classification(Smooth{CaseId::C2c}));
  EXPECT_EQ(classify(P({4, 3, 2, 1}, -4, -3)), Classification(Smooth{CaseId::C3h}));
  EXPECT_EQ(classify(P({1, 0, 0, 0}, -1, 0)), Classification(Singular{SingularReason::BaseLocusTooLarge}));
}

// 2 d2 + b1 = -1 puts (3,1,1,0; -3,0) beyond Y3, so the verdict is singular
// for the base-locus reason rather than for lack of a matching case.
TEST(Classify, TupleBeyondY3IsSingular) {
  const auto v = classify(P({3, 1, 1, 0}, -3, 0));
  EXPECT_FALSE(v.smooth());
  EXPECT_EQ(v.reason(), SingularReason::BaseLocusTooLarge);
  EXPECT_TRUE(matching_cases(P({3, 1, 1, 0}, -3, 0)).empty());
}

TEST(Classify, NoCaseMatchesInsideTheLegalStrata) {
  // Bs|D1| = Y3 with d1 + b1 < 0 and b2 != 0: no case of the stratum applies.
  const auto v = classify(P({3, 2, 1, 1}, -4, 1));
  EXPECT_FALSE(v.smooth());
  EXPECT_EQ(v.reason(), SingularReason::NoCaseMatches);
}

TEST(Classify, AgreesWithMatchingCases) {
  sweep(5, -10, 6, [](const ScrollParams& p) {
    const auto v = classify(p);
    const auto m = matching_cases(p);
    if (v.smooth()) {
      ASSERT_EQ(m, std::vector<CaseId>{v.case_id()}) << p;
    } else {
      ASSERT_TRUE(m.empty()) << p;
    }
  });
}

TEST(MatchingCases, KnownValues) {
  EXPECT_EQ(matching_cases(P({2, 1, 1, 1}, -2, -1)), std::vector<CaseId>{CaseId::C2c});
  EXPECT_TRUE(matching_cases(P({1, 0, 0, 0}, -1, 0)).empty());
}

TEST(MatchingCases, AtMostOneCaseOnTheExclusivityBox) {
  std::size_t tuples = 0;
  for (bool strict : {false, true}) {
    sweep(6, -12, 6, [&](const ScrollParams& p) {
      ++tuples;
      ASSERT_LE(matching_cases(p, CriterionOptions{strict}).size(), 1u) << p << " strict=" << strict;
    });
  }
  EXPECT_GT(tuples, 10000u);
}

TEST(MatchingCases, EveryCaseHasAWitnessThatClassifiesToIt) {
  const auto found = realizability_sweep(SearchBounds::with_d1_max(12));
  for (const auto& [c, p] : found) {
    ASSERT_TRUE(p.has_value()) << "no witness for case " << to_string(c);
    const auto v = classify(*p);
    ASSERT_TRUE(v.smooth()) << *p;
    EXPECT_EQ(v.case_id(), c) << *p;
    EXPECT_EQ(case_stratum(c), 1 + static_cast<int>(base_locus(*p, p->b1()))) << *p;
  }
}

TEST(CaseIds, RoundTripThroughNames) {
  for (auto c : kAllCases) EXPECT_EQ(parse_case_id(to_string(c)), c);
  EXPECT_FALSE(parse_case_id("3n").has_value());
  EXPECT_EQ(kAllCases.size(), 25u);
}

// The two readings of case 3j differ on tuples with d2 + b2 != 0.
TEST(Classify, Strict3jReadingIsNarrower) {
  const auto p = P({3, 2, 2, 1}, -3, -1);
  EXPECT_EQ(classify(p), Classification(Smooth{CaseId::C3j}));
  EXPECT_FALSE(classify(p, CriterionOptions{true}).smooth());
  std::size_t only_default = 0;
  sweep(6, -12, 6, [&](const ScrollParams& q) {
    const bool loose = classify(q).smooth();
    const bool strict = classify(q, CriterionOptions{true}).smooth();
    ASSERT_TRUE(loose || !strict) << q;
    only_default += loose && !strict;
  });
  EXPECT_GT(only_default, 0u);
}

TEST(Dstar, KnownValues) {
  EXPECT_TRUE(dstar4_holds(P({4, 3, 2, 1}, -4, -3)));
  EXPECT_TRUE(dstar4_holds(P({0, 0, 0, 0}, 0, 0)));
  EXPECT_FALSE(dstar4_holds(P({2, 1, 1, 1}, -2, -1)));
  EXPECT_TRUE(dstar5_holds(P({2, 1, 1, 1}, -2, -1)));
  EXPECT_TRUE(dstar5_holds(P({0, 0, 0, 0}, 0, 0)));
  EXPECT_FALSE(dstar5_holds(P({3, 1, 1, 1}, -3, -2)));
}

TEST(IntersectionNumbers, KnownValues) {
  const auto x3 = intersection_numbers(P({4, 3, 2, 1}, -4, -3));
  EXPECT_EQ(x3.c12c13, 2);
  EXPECT_EQ(x3.ab, 2);
  const auto z = intersection_numbers(P({0, 0, 0, 0}, 0, 0));
  EXPECT_EQ(z.c12c13, 0);
  EXPECT_EQ(z.ab, 0);
  EXPECT_EQ(z.a1a2d2, 0);
  EXPECT_EQ(intersection_numbers(P({3, 2, 1, 0}, -3, 0)).a1a2d2, 0);
}

TEST(IntersectionNumbers, DifferenceIdentityOnRandomTuples) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> dd(0, 30), bb(-60, 60);
  for (int checked = 0; checked < 10000;) {
    std::array<int, 4> d{dd(rng), dd(rng), dd(rng), dd(rng)};
    std::sort(d.begin(), d.end(), std::greater<>());
    int b1 = bb(rng), b2 = bb(rng);
    if (b1 > b2) std::swap(b1, b2);
    if (2 * d[0] + b1 < 0) continue;
    ++checked;
    const auto n = intersection_numbers(P(d, b1, b2));
    ASSERT_EQ(n.c12c13 - n.ab, 2 * (d[0] + d[1] + d[2]) + 3 * (d[3] + b1 + b2));
  }
}

// Under the Y4 equalities the two curve intersection numbers coincide.
TEST(IntersectionNumbers, Dstar4TuplesBalanceTheCurves) {
  sweep(8, -16, 4, [](const ScrollParams& p) {
    if (!dstar4_holds(p)) return;
    const auto n = intersection_numbers(p);
    ASSERT_EQ(n.c12c13, n.ab) << p;
  });
}
