#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fracfac/analyze.hpp"
#include "fracfac/construct.hpp"
#include "fracfac/corpus.hpp"
#include "fracfac/search.hpp"
#include "oracles.hpp"

using namespace fracfac;

namespace {

// A random invertible k x k map, as the images of e_1..e_k.
std::vector<BitVec> random_basis(std::mt19937_64& rng, int k) {
  while (true) {
    std::vector<BitVec> images;
    for (int i = 0; i < k; ++i) {
      images.emplace_back(k, static_cast<std::uint32_t>(rng() & ((1u << k) - 1)));
    }
    if (gf2::rank(images) == k) return images;
  }
}

RegularDesign shuffled(std::mt19937_64& rng, const RegularDesign& d) {
  auto cols = d.columns();
  std::shuffle(cols.begin(), cols.end(), rng);
  return RegularDesign::from_columns(d.k(), cols);
}

RegularDesign with_column(const RegularDesign& d, const BitVec& extra) {
  auto cols = d.columns();
  cols.push_back(extra);
  return RegularDesign::from_columns(d.k(), cols);
}

// Criterion B by brute force: no nonzero vector avoids all columns and
// pairwise sums.
bool definitional_maximal(const RegularDesign& d) {
  const auto raw = oracle::raw(d);
  for (std::uint32_t v = 1; v < (1u << d.k()); ++v) {
    bool covered = false;
    for (std::size_t i = 0; i < raw.size() && !covered; ++i) {
      covered = raw[i] == v;
      for (std::size_t j = i + 1; j < raw.size() && !covered; ++j) covered = (raw[i] ^ raw[j]) == v;
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

TEST(Maximality, Examples) {
  EXPECT_TRUE(is_maximal(design_2_5_1()).is_maximal);
  for (int k = 3; k <= 6; ++k) EXPECT_TRUE(is_maximal(saturated_res4(k)).is_maximal);

  const auto nine = project_drop(family_5N16(1), {0});
  const auto report = is_maximal(nine);
  EXPECT_FALSE(report.is_maximal);
  ASSERT_TRUE(report.witness.has_value());
  const auto restored = with_column(nine, *report.witness);
  const auto r = resolution(restored);
  EXPECT_TRUE(!r || *r >= 4);
  EXPECT_TRUE(report.criterion_agreement);
}

TEST(Maximality, Preconditions) {
  EXPECT_THROW(is_maximal(saturated_res3(3)), Error);
  EXPECT_THROW(is_maximal(project(family_5N16(1), {0, 1, 2, 3, 4})), Error);
}

TEST(Maximality, CriteriaAgreeWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 200; ++s) {
    const int k = 4 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>((1 << (k - 1)) - k + 1));
    RegularDesign d = full_factorial(k);
    try {
      d = random_resolution_iv(rng, k, n);
    } catch (const Error&) {
      continue;
    }
    const auto report = is_maximal(d);
    EXPECT_EQ(report.is_maximal, definitional_maximal(d));
    EXPECT_TRUE(report.criterion_agreement);
    EXPECT_EQ(report.witness.has_value(), !report.is_maximal);
    if (report.witness) {
      const auto r = resolution(with_column(d, *report.witness));
      EXPECT_TRUE(!r || *r >= 4);
    }
  }
}

TEST(Maximality, ExtensionReachesKnownMaximalClasses) {
  // Every resolution IV design at 16 and 32 runs grows, by appending
  // witnesses, into one of the known maximal classes.
  std::mt19937_64 rng(23);
  for (int k : {4, 5}) {
    const auto census = enumerate_maximal(k, k, 1 << (k - 1));
    for (int s = 0; s < 60; ++s) {
      const int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>((1 << (k - 1)) - k + 1));
      auto d = random_resolution_iv(rng, k, n);
      for (auto report = is_maximal(d); !report.is_maximal; report = is_maximal(d)) {
        d = with_column(d, *report.witness);
      }
      const bool known = std::any_of(census.classes.begin(), census.classes.end(), [&](const CanonicalForm& c) {
        const auto rep = c.design();
        return fingerprint(d) == fingerprint(rep) && find_isomorphism(d, rep, ~std::uint64_t{0});
      });
      EXPECT_TRUE(known) << d.factors() << " factors";
    }
  }
}

TEST(CanonicalForm, MatchesFullGroupOracle) {
  std::mt19937_64 rng(29);
  for (int s = 0; s < 60; ++s) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>((1 << k) - k));
    const auto d = random_resolution_iii(rng, k, n);
    std::vector<std::uint32_t> got;
    for (const auto& c : canonical_form(d).columns) got.push_back(c.bits());
    EXPECT_EQ(got, oracle::gl_canonical(k, oracle::raw(d)));
  }
}

TEST(CanonicalForm, MatchesFullGroupOracleAtFiveDimensions) {
  const auto d = design_2_9_4();
  std::vector<std::uint32_t> got;
  for (const auto& c : canonical_form(d).columns) got.push_back(c.bits());
  EXPECT_EQ(got, oracle::gl_canonical(5, oracle::raw(d)));
}

TEST(CanonicalForm, NoSampledTransformBeatsItAtFiveDimensions) {
  std::mt19937_64 rng(53);
  for (const auto& d : {family_5N16(1), saturated_res4(5), project_drop(saturated_res4(5), {2, 7, 11})}) {
    const auto form = canonical_form(d).columns;
    for (int s = 0; s < 20000; ++s) {
      auto image = apply_transform(d, random_basis(rng, 5)).columns();
      std::sort(image.begin(), image.end());
      ASSERT_FALSE(image < form);
    }
  }
}

TEST(CanonicalForm, InvariantUnderTransformsAndPermutations) {
  std::mt19937_64 rng(31);
  for (int s = 0; s < 100; ++s) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int cap = k == 5 ? 12 : (1 << k) - 1;
    const int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>(cap - k + 1));
    const auto d = random_resolution_iii(rng, k, n);
    const auto moved = shuffled(rng, apply_transform(d, random_basis(rng, k)));
    EXPECT_EQ(canonical_form(moved), canonical_form(d));
    EXPECT_EQ(canonical_form(canonical_form(d).design()), canonical_form(d));
    EXPECT_EQ(fingerprint(moved), fingerprint(d));
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphicDesigns) {
  EXPECT_EQ(canonical_form(saturated_res4(4)), canonical_form(doubled_n(full_factorial(2), 2)));
  const auto a = canonical_form(design_2_5_1());
  const auto sat = saturated_res4(4);
  for (int drop = 0; drop < 8; ++drop) {
    for (int drop2 = drop + 1; drop2 < 8; ++drop2) {
      for (int drop3 = drop2 + 1; drop3 < 8; ++drop3) {
        EXPECT_NE(a, canonical_form(project_drop(sat, {drop, drop2, drop3})));
      }
    }
  }
}

TEST(CanonicalForm, Limits) {
  EXPECT_THROW(canonical_form(saturated_res4(6)), Error);
  EXPECT_THROW(canonical_form(project(family_5N16(1), {0, 1, 2, 3, 4})), Error);
}

TEST(Isomorphism, Examples) {
  std::mt19937_64 rng(37);
  const auto d = family_5N16(1);
  EXPECT_EQ(are_isomorphic(d, shuffled(rng, d)), Isomorphism::Yes);
  EXPECT_EQ(are_isomorphic(d, apply_transform(d, random_basis(rng, d.k()))), Isomorphism::Yes);
  EXPECT_EQ(are_isomorphic(saturated_res4(4), design_2_5_1()), Isomorphism::No);
  EXPECT_EQ(are_isomorphic(family_5N16(1), doubled(saturated_res4(4))), Isomorphism::No);
  EXPECT_STREQ(to_string(Isomorphism::Unknown), "unknown");
}

TEST(Isomorphism, LargerDimensionsUseBudgetedSearch) {
  std::mt19937_64 rng(41);
  const auto d = family_5N16(2);
  const auto moved = shuffled(rng, apply_transform(d, random_basis(rng, d.k())));
  EXPECT_EQ(are_isomorphic(d, moved), Isomorphism::Yes);
  EXPECT_EQ(are_isomorphic(d, moved, 1), Isomorphism::Unknown);
  EXPECT_THROW(find_isomorphism(d, moved, 1), Error);
}

TEST(Isomorphism, FoundMapIsCorrect) {
  std::mt19937_64 rng(43);
  for (int s = 0; s < 40; ++s) {
    const int k = 3 + static_cast<int>(rng() % 4);
    const int n = k + static_cast<int>(rng() % 5);
    const auto d = random_resolution_iii(rng, k, n);
    const auto moved = shuffled(rng, apply_transform(d, random_basis(rng, k)));
    const auto map = find_isomorphism(d, moved, ~std::uint64_t{0});
    ASSERT_TRUE(map.has_value());
    auto image = apply_transform(d, *map).columns();
    auto target = moved.columns();
    std::sort(image.begin(), image.end());
    std::sort(target.begin(), target.end());
    EXPECT_EQ(image, target);
  }
}

TEST(Fingerprint, Examples) {
  EXPECT_EQ(fingerprint(design_2_5_1()), fingerprint(design_2_5_1()));
  EXPECT_NE(fingerprint(design_2_5_1()), fingerprint(saturated_res4(4)));
  EXPECT_NE(fingerprint(design_2_5_1()).hash(), fingerprint(saturated_res4(4)).hash());
  EXPECT_EQ(fingerprint(design_2_5_1()).hash().size(), 16u);
  const auto group = project(family_5N16(1), {0, 1, 2, 3, 4});
  EXPECT_EQ(fingerprint(group).runs, 16u);
}
