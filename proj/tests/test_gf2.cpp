#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "fracfac/gf2.hpp"
#include "oracles.hpp"

using fracfac::Error;
using fracfac::ErrorKind;
using namespace fracfac::gf2;

namespace {

std::vector<BitVec> vecs(std::initializer_list<const char*> strings) {
  std::vector<BitVec> out;
  for (const char* s : strings) out.push_back(BitVec::from_string(s));
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

}  // namespace

TEST(BitVec, StringRoundTripAndOrder) {
  const auto v = BitVec::from_string("1011");
  EXPECT_EQ(v.width(), 4);
  EXPECT_EQ(v.bits(), 0b1011u);
  EXPECT_EQ(v.to_string(), "1011");
  EXPECT_TRUE(v.coord(1));
  EXPECT_FALSE(v.coord(2));
  EXPECT_EQ(v.weight(), 3);
  EXPECT_LT(BitVec::from_string("0111"), BitVec::from_string("1000"));
  EXPECT_EQ(BitVec::unit(4, 1).to_string(), "1000");
  EXPECT_EQ(BitVec::unit(4, 4).to_string(), "0001");
}

TEST(BitVec, ExtendAppendsLastCoordinate) {
  const auto v = BitVec::from_string("101");
  EXPECT_EQ(v.extended(false).to_string(), "1010");
  EXPECT_EQ(v.extended(true).to_string(), "1011");
}

TEST(BitVec, XorAndDot) {
  const auto a = BitVec::from_string("1100");
  const auto b = BitVec::from_string("0110");
  EXPECT_EQ((a ^ b).to_string(), "1010");
  EXPECT_EQ((a ^ a), BitVec::zero(4));
  EXPECT_TRUE(a.dot(BitVec::from_string("1000")));
  EXPECT_FALSE(a.dot(b ^ BitVec::from_string("0110")));
}

TEST(BitVec, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { BitVec::from_string("10a1"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { BitVec(3, 0b1000); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { BitVec(33, 0); }), ErrorKind::SizeLimit);
  EXPECT_EQ(kind_of([] { BitVec::from_string("10") ^ BitVec::from_string("100"); }),
            ErrorKind::DimensionMismatch);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(vecs({"1000", "0100", "0010", "0001"})), 4);
  EXPECT_EQ(rank(vecs({"0000"})), 0);
  EXPECT_EQ(rank(vecs({"1100", "0110", "1010"})), 2);
  EXPECT_EQ(rank(std::vector<BitVec>{}), 0);
  EXPECT_EQ(kind_of([] { rank(vecs({"10", "100"})); }), ErrorKind::DimensionMismatch);
}

TEST(Rank, MatchesOracleOnRandomSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 12);
    const int count = static_cast<int>(rng() % 15);
    std::vector<BitVec> rows;
    std::vector<std::uint32_t> raw;
    for (int i = 0; i < count; ++i) {
      const auto bits = static_cast<std::uint32_t>(rng() & ((1u << width) - 1));
      rows.emplace_back(width, bits);
      raw.push_back(bits);
    }
    EXPECT_EQ(rank(rows), oracle::rank(raw));
  }
}

TEST(EnumerateSpan, Examples) {
  EXPECT_EQ(enumerate_span(std::vector<BitVec>{}, 3), std::vector<BitVec>{BitVec::zero(3)});
  EXPECT_EQ(enumerate_span(vecs({"100", "010"}), 3), vecs({"000", "100", "110", "010"}));
  EXPECT_EQ(enumerate_span(vecs({"1111"}), 4), vecs({"0000", "1111"}));
}

TEST(EnumerateSpan, GrayOrderAndSize) {
  const auto gens = vecs({"10010", "01100", "00111", "11111"});
  const auto span = enumerate_span(gens, 5);
  ASSERT_EQ(span.size(), 16u);
  for (std::size_t i = 1; i < span.size(); ++i) {
    const auto diff = span[i] ^ span[i - 1];
    EXPECT_NE(std::find(gens.begin(), gens.end(), diff), gens.end());
  }
  EXPECT_EQ(std::set<BitVec>(span.begin(), span.end()).size(), 16u);
}

TEST(EnumerateSpan, DependentGeneratorsRepeat) {
  const auto span = enumerate_span(vecs({"110", "011", "101"}), 3);
  ASSERT_EQ(span.size(), 8u);
  EXPECT_EQ(std::set<BitVec>(span.begin(), span.end()).size(), 4u);
}

TEST(Binomial, PascalValues) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ull);
  EXPECT_EQ(binomial(4, 5), 0u);
  EXPECT_EQ(binomial(4, -1), 0u);
}

TEST(Krawtchouk, Examples) {
  for (int x = 0; x <= 6; ++x) EXPECT_EQ(krawtchouk(6, 0, x), 1);
  EXPECT_EQ(krawtchouk(5, 1, 2), 1);
  EXPECT_EQ(krawtchouk(4, 2, 1), 0);
  EXPECT_EQ(kind_of([] { krawtchouk(4, 5, 1); }), ErrorKind::Domain);
}

TEST(Krawtchouk, MatchesOracle) {
  for (int n = 0; n <= 20; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int x = 0; x <= n; ++x) EXPECT_EQ(krawtchouk(n, j, x), oracle::krawtchouk(n, j, x));
    }
  }
}

TEST(MacWilliams, Examples) {
  EXPECT_EQ(macwilliams_dual({{1, 0, 3, 0}}, 2).counts, (std::vector<std::uint64_t>{1, 0, 0, 1}));
  // Full space of length 4: the dual is the zero code.
  EXPECT_EQ(macwilliams_dual({{1, 4, 6, 4, 1}}, 4).counts,
            (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
  // Even-weight code of length 5 (the row code of the 2^{5-1}).
  EXPECT_EQ(macwilliams_dual({{1, 0, 10, 0, 5, 0}}, 4).counts,
            (std::vector<std::uint64_t>{1, 0, 0, 0, 0, 1}));
}

TEST(MacWilliams, RejectsInconsistentInput) {
  EXPECT_EQ(kind_of([] { macwilliams_dual({{1, 1, 1}}, 2); }), ErrorKind::Inconsistent);
  EXPECT_EQ(kind_of([] { macwilliams_dual({{1, 2, 0, 0}}, 2); }), ErrorKind::Inconsistent);
}

TEST(MacWilliams, DualOfDualIsIdentityOnRandomCodes) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const int r = 1 + static_cast<int>(rng() % n);
    std::vector<BitVec> gens;
    for (int i = 0; i < r; ++i) gens.emplace_back(n, static_cast<std::uint32_t>(rng() & ((1u << n) - 1)));
    const int dim = rank(gens);
    std::set<BitVec> code;
    for (const auto& v : enumerate_span(gens, n)) code.insert(v);
    WeightDistribution a{std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0)};
    for (const auto& v : code) ++a.counts[static_cast<std::size_t>(v.weight())];

    // Dual by direct enumeration.
    WeightDistribution b{std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0)};
    for (std::uint32_t y = 0; y < (1u << n); ++y) {
      const BitVec v(n, y);
      if (std::all_of(gens.begin(), gens.end(), [&](const BitVec& g) { return !g.dot(v); })) {
        ++b.counts[static_cast<std::size_t>(v.weight())];
      }
    }
    EXPECT_EQ(macwilliams_dual(a, dim).counts, b.counts);
    EXPECT_EQ(macwilliams_dual(b, n - dim).counts, a.counts);
  }
}
