#include <gtest/gtest.h>

#include <random>

#include "scrollsmith/criterion.hpp"
#include "scrollsmith/scroll.hpp"

using namespace scrollsmith;

namespace {

ScrollParams P(std::array<int, 4> d, int b1, int b2) { return ScrollParams(d, b1, b2); }

// Random canonical tuple with a non-empty first linear system.
ScrollParams random_params(std::mt19937_64& rng, int d_max = 12) {
  std::uniform_int_distribution<int> dd(0, d_max);
  std::array<int, 4> d{dd(rng), dd(rng), dd(rng), dd(rng)};
  std::sort(d.begin(), d.end(), std::greater<>());
  std::uniform_int_distribution<int> bb(-2 * d[0], 2 * d_max);
  int b1 = bb(rng), b2 = bb(rng);
  if (b1 > b2) std::swap(b1, b2);
  return ScrollParams(d, b1, b2);
}

}  // namespace

TEST(Canonicalize, KnownValues) {
  EXPECT_EQ(canonicalize({1, 1, 1, 1, 1}, -2, -1), P({0, 0, 0, 0}, 0, 1));
  EXPECT_EQ(canonicalize({1, 1, 1, 2, 0}, -1, -2), P({2, 1, 1, 1}, -2, -1));
  EXPECT_THROW(canonicalize({0, 0, 0, 0, 0}, -1, 0), ParamError);
}

TEST(Canonicalize, TraceRecordsEachStep) {
  const auto c = canonicalize_with_trace({2, 3, 2, 2, 1}, -1, -4);
  EXPECT_EQ(c.params, P({2, 1, 1, 1}, -2, 1));
  EXPECT_EQ(c.twist, 1);
  EXPECT_TRUE(c.sorted);
  EXPECT_TRUE(c.swapped);
  const auto id = canonicalize_with_trace({2, 1, 1, 1, 0}, -2, -1);
  EXPECT_EQ(id.twist, 0);
  EXPECT_FALSE(id.sorted);
  EXPECT_FALSE(id.swapped);
}

TEST(Canonicalize, IdempotentAndTwistInvariant) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> twist(-5, 5);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int i = 0; i < 10000; ++i) {
    const auto p = random_params(rng);
    std::array<int, 5> d{p.d(1), p.d(2), p.d(3), p.d(4), 0};
    // Shuffle and twist the presentation.
    std::swap(d[pick(rng)], d[pick(rng)]);
    const int c = twist(rng);
    for (auto& v : d) v += c;
    const auto q = canonicalize(d, p.b2() - 2 * c, p.b1() - 2 * c);
    ASSERT_EQ(q, p);
    const std::array<int, 5> qd{q.d(1), q.d(2), q.d(3), q.d(4), 0};
    ASSERT_EQ(canonicalize(qd, q.b1(), q.b2()), q);
    ASSERT_EQ(classify(q), classify(p));
    ASSERT_EQ(euler_characteristic(q), euler_characteristic(p));
  }
}

TEST(ScrollParams, RejectsInvalidTuples) {
  EXPECT_THROW(P({1, 2, 0, 0}, 0, 0), ParamError);
  EXPECT_THROW(P({1, 0, 0, 0}, 1, 0), ParamError);
  EXPECT_THROW(P({0, 0, 0, 0}, -1, 0), ParamError);
  EXPECT_THROW(P({1, 0, 0, -1}, 0, 0), ParamError);
}

TEST(CoeffDegrees, KnownValues) {
  const auto m = coeff_degrees(P({2, 1, 1, 1}, -2, -1), -2);
  EXPECT_EQ(m.at(1, 1), 2);
  EXPECT_EQ(m.at(1, 5), 0);
  EXPECT_EQ(m.at(2, 3), 0);
  EXPECT_EQ(m.at(5, 5), -2);
  EXPECT_TRUE(m.vanishes(5, 5));

  const auto ones = coeff_degrees(P({0, 0, 0, 0}, 0, 1), 1);
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) EXPECT_EQ(ones.at(i, j), 1);
  }

  const auto x3 = coeff_degrees(P({4, 3, 2, 1}, -4, -3), -4);
  EXPECT_EQ(x3.at(4, 5), -3);
  EXPECT_EQ(x3.at(3, 4), -1);
  EXPECT_EQ(x3.at(1, 4), 1);
}

TEST(BaseLocus, KnownValues) {
  EXPECT_EQ(base_locus(P({2, 1, 1, 1}, -2, -1), -2), BaseLocus::Y5);
  EXPECT_EQ(base_locus(P({4, 3, 2, 1}, -4, -3), -4), BaseLocus::Y4);
  EXPECT_EQ(base_locus(P({4, 3, 2, 1}, -4, -3), 0), BaseLocus::Empty);
  EXPECT_EQ(base_locus(P({1, 0, 0, 0}, -1, 0), -1), BaseLocus::TooLarge);
  EXPECT_EQ(base_locus(P({3, 2, 1, 0}, -3, -3), -3), BaseLocus::Y3);
}

TEST(BaseLocus, IsMonotoneInB) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    const auto p = random_params(rng);
    ASSERT_GE(static_cast<int>(base_locus(p, p.b1())), static_cast<int>(base_locus(p, p.b2())));
  }
}

TEST(EulerCharacteristic, KnownValues) {
  EXPECT_EQ(euler_characteristic(P({0, 0, 0, 0}, 0, 1)), -4);
  EXPECT_EQ(euler_characteristic(P({2, 1, 1, 1}, -2, -1)), -4);
  EXPECT_EQ(euler_characteristic(P({4, 3, 2, 1}, -4, -3)), -4);
  EXPECT_EQ(euler_characteristic(P({0, 0, 0, 0}, 0, 0)), 16);
}

TEST(EulerCharacteristic, AlwaysDivisibleByFour) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10000; ++i) {
    const auto p = random_params(rng, 40);
    ASSERT_EQ(euler_characteristic(p) % 4, 0) << p;
  }
}

TEST(Rationality, KnownValues) {
  EXPECT_EQ(rationality_verdict(P({2, 1, 1, 1}, -2, -1)).verdict, Rationality::Rational);
  EXPECT_EQ(rationality_verdict(P({2, 1, 1, 1}, -2, -1)).chi, -4);
  EXPECT_EQ(rationality_verdict(P({0, 0, 0, 0}, 0, 0)).verdict, Rationality::Nonrational);
  // chi = 0 and chi = -8.
  EXPECT_EQ(rationality_verdict(P({1, 0, 0, 0}, -1, 1)).chi, 0);
  EXPECT_EQ(rationality_verdict(P({1, 0, 0, 0}, -1, 1)).verdict, Rationality::Rational);
  EXPECT_EQ(rationality_verdict(P({1, 1, 1, 1}, -1, -1)).chi, -8);
  EXPECT_EQ(rationality_verdict(P({1, 1, 1, 1}, -1, -1)).verdict, Rationality::Rational);
  EXPECT_EQ(rationality_verdict(P({1, 1, 1, 1}, -1, 0)).chi, -28);
  EXPECT_EQ(rationality_verdict(P({1, 1, 1, 1}, -1, 0)).verdict, Rationality::Nonrational);
}

TEST(DivisorClass, TwistShiftsTheFiberCoefficient) {
  const auto d = DivisorClass::fiber_quadric(-3);
  EXPECT_EQ(d.twisted(2), (DivisorClass{2, 1}));
  EXPECT_EQ(d + DivisorClass::fiber_quadric(1), (DivisorClass{4, -2}));
}
