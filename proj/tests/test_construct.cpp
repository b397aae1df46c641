#include <gtest/gtest.h>

#include <random>

#include "fracfac/analyze.hpp"
#include "fracfac/construct.hpp"
#include "fracfac/corpus.hpp"
#include "fracfac/search.hpp"
#include "oracles.hpp"

using namespace fracfac;

TEST(Double, SmallExamples) {
  const auto d = doubled(full_factorial(2));
  EXPECT_EQ(d.k(), 3);
  EXPECT_EQ(d.factors(), 4);
  EXPECT_EQ(wordlength_pattern(d).words, (std::vector<std::uint64_t>{0, 0, 0, 1}));

  const auto w = wordlength_pattern(doubled(design_2_5_1()));
  EXPECT_EQ(w.B(3), 0u);
  EXPECT_EQ(w.B(4), 10u);
}

TEST(Double, RunMatrixIsBlockMatrix) {
  for (const auto& d : {design_2_5_1(), full_factorial(3), saturated_res3(3)}) {
    const auto x = expand_runs(d);
    const auto y = expand_runs(doubled(d));
    const int n = d.factors();
    // Run r of the double splits as (r >> 1, r & 1); column j as (j mod n, j >= n).
    for (int r = 0; r < y.rows; ++r) {
      for (int c = 0; c < y.cols; ++c) {
        const int base = x.at(r >> 1, c % n);
        const int sign = (c >= n && (r & 1)) ? -1 : 1;
        EXPECT_EQ(y.at(r, c), base * sign);
      }
    }
  }
}

TEST(Double, RepeatedDoubling) {
  EXPECT_EQ(doubled_n(design_2_5_1(), 0), design_2_5_1());
  for (int t = 0; t <= 3; ++t) {
    const auto d = doubled_n(design_2_5_1(), t);
    EXPECT_EQ(d.factors(), 5 << t);
    EXPECT_EQ(d.runs(), 16u << t);
  }
  for (int k = 3; k <= 6; ++k) {
    const auto d = doubled_n(full_factorial(2), k - 2);
    EXPECT_EQ(d.factors(), 1 << (k - 1));
    EXPECT_EQ(resolution(d), 4);
  }
  EXPECT_THROW(doubled_n(design_2_5_1(), 29), Error);
}

TEST(Project, Examples) {
  const auto base = family_5N16(1);
  EXPECT_EQ(project(base, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), base);

  const auto nine = project_drop(base, {0});
  EXPECT_EQ(nine.factors(), 9);
  const auto w = wordlength_pattern(nine);
  EXPECT_EQ(w.B(3), 0u);
  EXPECT_EQ(w.B(4), 6u);
  EXPECT_EQ(w.words, oracle::subset_wlp(oracle::raw(nine)));
  EXPECT_EQ(project(base, {9, 0}).column(0), base.column(0));

  EXPECT_THROW(project(base, {0, 0}), Error);
  EXPECT_THROW(project(base, {10}), Error);
  EXPECT_THROW(project(base, {}), Error);
}

TEST(Project, SaturatedResIvProjectionsAreEven) {
  std::mt19937_64 rng(3);
  for (int k = 3; k <= 6; ++k) {
    const auto sat = saturated_res4(k);
    for (int s = 0; s < 30; ++s) {
      const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(sat.factors()));
      const auto p = random_projection(rng, sat, n);
      EXPECT_TRUE(is_even(wordlength_pattern(p)));
      EXPECT_TRUE(is_even(p));
    }
  }
}

TEST(Foldover, SaturatedResIiiBecomesSaturatedResIv) {
  const auto f = foldover(saturated_res3(4), true);
  EXPECT_EQ(f.factors(), 16);
  EXPECT_EQ(f.k(), 5);
  EXPECT_EQ(resolution(f), 4);
  EXPECT_EQ(canonical_form(f), canonical_form(saturated_res4(5)));
}

TEST(Foldover, ResolutionIiiInputsGainResolutionIv) {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 40; ++s) {
    const int k = 3 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>((1 << k) - k));
    const auto d = random_resolution_iii(rng, k, n);
    const auto r = resolution(foldover(d, s % 2 == 0));
    EXPECT_TRUE(!r || *r >= 4);
  }
}

TEST(Foldover, SingleFactor) {
  const auto f = foldover(full_factorial(1), false);
  EXPECT_EQ(f.factors(), 1);
  EXPECT_EQ(f.k(), 2);
  const auto r = reembed(f);
  EXPECT_EQ(r.k(), 1);
  EXPECT_TRUE(strength_oracle(r, 1));
}

TEST(Families, NamedDesigns) {
  const auto s3 = saturated_res3(3);
  EXPECT_EQ(s3.factors(), 7);
  EXPECT_EQ(resolution(s3), 3);
  EXPECT_EQ(wordlength_pattern(s3).B(3), 7u);

  const auto s4 = saturated_res4(4);
  EXPECT_EQ(s4.factors(), 8);
  EXPECT_EQ(resolution(s4), 4);
  EXPECT_TRUE(is_even(s4));

  for (int k = 3; k <= 5; ++k) {
    EXPECT_EQ(canonical_form(saturated_res4(k)),
              canonical_form(doubled_n(full_factorial(2), k - 2)));
  }

  EXPECT_EQ(family_5N16(0), design_2_5_1());
  EXPECT_EQ(resolution(family_5N16(0)), 5);
  EXPECT_TRUE(is_maximal(family_5N16(1)).is_maximal);

  const auto d94 = design_2_9_4();
  EXPECT_EQ(d94.factors(), 9);
  EXPECT_EQ(d94.k(), 5);
  EXPECT_EQ(resolution(d94), 4);
  EXPECT_TRUE(is_maximal(d94).is_maximal);
}

TEST(Families, FrozenNineFactorDesignMatchesCensus) {
  const auto census = enumerate_maximal(5, 9, 9);
  ASSERT_EQ(census.classes.size(), 1u);
  EXPECT_EQ(census.classes.front().design(), design_2_9_4());
  EXPECT_EQ(canonical_form(design_2_9_4()).design(), design_2_9_4());
}

TEST(Families, Bounds) {
  EXPECT_THROW(saturated_res3(1), Error);
  EXPECT_THROW(saturated_res4(2), Error);
  EXPECT_THROW(saturated_res3(21), Error);
  EXPECT_THROW(full_factorial(0), Error);
}

TEST(DoubledPattern, Examples) {
  // 2^{5-1}: B5 = 1, n = 5.
  const auto w = doubled_wordlength_pattern(wordlength_pattern(design_2_5_1()), 5);
  EXPECT_EQ(w, wordlength_pattern(family_5N16(1)));
  EXPECT_EQ(w.B(4), 10u);

  const auto ff = doubled_wordlength_pattern(wordlength_pattern(full_factorial(3)), 3);
  EXPECT_EQ(ff.B(4), 3u);
  for (int i = 1; i <= 6; i += 2) EXPECT_EQ(ff.B(i), 0u);
  EXPECT_EQ(ff, wordlength_pattern(doubled(full_factorial(3))));

  EXPECT_TRUE(verify_thm23(saturated_res3(3)));
  EXPECT_TRUE(verify_thm23(full_factorial(3)));
  EXPECT_TRUE(verify_thm22(design_2_5_1()));
}

TEST(DoubledPattern, MatchesSubsetOracle) {
  for (const auto& [name, d] : builtin_corpus()) {
    if (2 * d.factors() > 22) continue;
    const auto predicted = doubled_wordlength_pattern(wordlength_pattern(d), d.factors());
    EXPECT_EQ(predicted.words, oracle::subset_wlp(oracle::raw(doubled(d)))) << name;
  }
}
