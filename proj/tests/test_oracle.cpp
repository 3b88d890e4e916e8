#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "qgen/arbitration.hpp"
#include "qgen/oracle.hpp"
#include "qgen/qfamilies.hpp"

using namespace qgen;

namespace {
const Rat kTol20 = Rat(1) / Rat(10).pow(20);
const Rat kTol6 = Rat(1) / Rat(10).pow(6);
}  // namespace

TEST(SeriesQEuler, Examples) {
  EXPECT_TRUE(enclosure_contains(series_q_euler(0, 0, Rat(1, 2), kTol6), 1));
  EXPECT_TRUE(enclosure_contains(series_q_euler(1, 0, Rat(1, 2), kTol20), Rat(-2, 5)));
  EXPECT_TRUE(enclosure_contains(series_q_euler(1, 1, Rat(1, 2), kTol6), Rat(4, 5)));
}

TEST(SeriesQEuler, WidthWithinTolerance) {
  const Enclosure e = series_q_euler(4, 2, Rat(2, 3), kTol20);
  EXPECT_LE(e.lo, e.hi);
  EXPECT_LE(e.width(), Rat(2) * kTol20);
  EXPECT_GT(e.terms, 0u);
}

TEST(SeriesQGenocchi, Examples) {
  EXPECT_TRUE(enclosure_contains(series_q_genocchi(1, 0, Rat(1, 2), kTol6), 1));
  EXPECT_TRUE(enclosure_contains(series_q_genocchi(2, 0, Rat(1, 2), kTol6), Rat(-4, 5)));
  EXPECT_TRUE(enclosure_contains(series_q_genocchi(1, 2, Rat(1, 2), kTol6), Rat(1, 4)));
}

TEST(SeriesQBernoulli, Examples) {
  EXPECT_TRUE(enclosure_contains(series_q_bernoulli(1, Rat(1, 2), kTol6), -2));
  EXPECT_TRUE(enclosure_contains(series_q_bernoulli(2, Rat(1, 2), kTol6), Rat(-8, 3)));
  EXPECT_TRUE(enclosure_contains(series_q_bernoulli(1, Rat(2, 3), kTol6), -3));
}

TEST(EnclosureContains, Examples) {
  EXPECT_TRUE(enclosure_contains({Rat(-1, 2), Rat(1, 2)}, 0));
  EXPECT_FALSE(enclosure_contains({1, 2}, 3));
  EXPECT_TRUE(enclosure_contains({Rat(5, 7), Rat(5, 7)}, Rat(5, 7)));
}

TEST(Oracle, DomainErrors) {
  try {
    series_q_euler(1, 0, Rat(1), kTol6);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "oracle requires rational q in (0,1)");
  }
  EXPECT_THROW(series_q_euler(1, 0, Rat(0), kTol6), std::invalid_argument);
  EXPECT_THROW(series_q_genocchi(1, 0, Rat(-1, 2), kTol6), std::invalid_argument);
  EXPECT_THROW(series_q_bernoulli(1, Rat(3, 2), kTol6), std::invalid_argument);
  EXPECT_THROW(series_q_euler(1, 0, Rat(1, 2), Rat(0)), std::invalid_argument);
  EXPECT_THROW(series_q_genocchi(0, 0, Rat(1, 2), kTol6), std::invalid_argument);
  EXPECT_THROW(series_q_bernoulli(0, Rat(1, 2), kTol6), std::invalid_argument);
}

// Closed forms against the series on the full soundness grid at a looser
// tolerance; the acceptance binary repeats this at 10^-25.
TEST(Oracle, SoundnessGrid) {
  const Rat tol = Rat(1) / Rat(10).pow(12);
  for (const Rat& q0 : {Rat(1, 3), Rat(1, 2), Rat(2, 3)}) {
    for (std::size_t n = 0; n <= 8; ++n) {
      for (std::size_t x = 0; x <= 3; ++x) {
        EXPECT_TRUE(check_closed_form(QFamily::q_euler, n, x, q0, tol).contained) << n << " " << x;
        if (n >= 1) EXPECT_TRUE(check_closed_form(QFamily::q_genocchi, n, x, q0, tol).contained) << n << " " << x;
      }
      if (n >= 1) EXPECT_TRUE(check_closed_form(QFamily::q_bernoulli, n, 0, q0, tol).contained) << n;
    }
  }
}

TEST(Oracle, MonotoneRefinement) {
  const Rat value = q_euler_number(3).eval(Rat(1, 2));
  Rat tol = Rat(1, 100);
  for (int i = 0; i < 30; ++i, tol = tol / Rat(2)) {
    ASSERT_TRUE(enclosure_contains(series_q_euler(3, 0, Rat(1, 2), tol), value)) << i;
  }
}

TEST(Oracle, AlternatingBracketing) {
  const Rat q0(1, 2);
  for (std::size_t n = 0; n <= 3; ++n) {
    const Rat limit = q_euler_poly(n).eval_int(0).eval(q0);
    const auto sums = q_euler_partial_sums(n, 0, q0, 60);
    ASSERT_EQ(sums.size(), 60u);
    std::size_t start = 0;
    for (std::size_t k = 2; k < sums.size(); ++k) {
      const Rat t1 = (sums[k - 1] - sums[k - 2]).abs(), t2 = (sums[k] - sums[k - 1]).abs();
      if (t2 < t1) {
        if (start == 0) start = k;
      } else {
        start = 0;
      }
    }
    ASSERT_GT(start, 0u) << "terms never decreased for n=" << n;
    for (std::size_t k = start; k < sums.size(); ++k) {
      const Rat lo = std::min(sums[k - 1], sums[k]), hi = std::max(sums[k - 1], sums[k]);
      EXPECT_TRUE(lo <= limit && limit <= hi) << n << " " << k;
    }
  }
}

TEST(Arbitration, OnlyGeneratingFunctionFormPasses) {
  const auto verdicts = arbitrate_genocchi_forms(3, {0, 1}, {Rat(1, 2)}, kTol20);
  ASSERT_EQ(verdicts.size(), 2u);
  EXPECT_EQ(verdicts[0].form, GenocchiForm::without_q_two);
  EXPECT_FALSE(verdicts[0].passes());
  EXPECT_EQ(verdicts[0].contained, 0u);
  EXPECT_TRUE(verdicts[1].passes());
}

TEST(Arbitration, JsonFields) {
  const auto j = to_json(check_closed_form(QFamily::q_euler, 1, 0, Rat(1, 2), kTol6));
  for (const char* key : {"family", "n", "x", "q", "lo", "hi", "closed_value", "contained"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["closed_value"], "-2/5");
  EXPECT_EQ(j["q"], "1/2");
  EXPECT_THROW(check_closed_form(QFamily::q_bernoulli, 1, 1, Rat(1, 2), kTol6), std::invalid_argument);
}
