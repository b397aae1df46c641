#pragma once

// Bit-level GF(2) machinery: fixed-width vectors, rank and span, and the
// Krawtchouk / MacWilliams transform that turns the weight distribution of a
// design's row code into its wordlength pattern.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracfac/error.hpp"

namespace fracfac::gf2 {

inline constexpr int kMaxWidth = 32;
inline constexpr int kMaxSpanDim = 26;
inline constexpr int kMaxBinomial = 64;

/// A vector in GF(2)^width, width <= 32.
///
/// Coordinate 1 is stored in the most significant of the `width` low bits, so
/// the integer value orders vectors the way their {0,1} strings sort.
/// Appending a coordinate (doubling, foldover) is a left shift.
class BitVec {
 public:
  BitVec() = default;
  BitVec(int width, std::uint32_t bits);

  static BitVec zero(int width) { return BitVec(width, 0); }
  /// Standard basis vector e_i, 1-based coordinate.
  static BitVec unit(int width, int coordinate);
  static BitVec from_string(std::string_view s);

  int width() const noexcept { return width_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  int weight() const noexcept;
  bool coord(int i) const;

  /// The vector with one more coordinate, appended last.
  BitVec extended(bool last) const;
  /// Inner product over GF(2).
  bool dot(const BitVec& other) const;

  std::string to_string() const;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend std::strong_ordering operator<=>(const BitVec&, const BitVec&) = default;

 private:
  int width_ = 0;
  std::uint32_t bits_ = 0;
};

/// GF(2) rank of a set of equal-width vectors.
int rank(std::span<const BitVec> rows);

/// All 2^r XOR combinations of r generators, in reflected Gray-code order:
/// element i is the sum of generators at the set bits of i ^ (i >> 1), so
/// consecutive elements differ by one generator. Element 0 is the zero vector.
std::vector<BitVec> enumerate_span(std::span<const BitVec> generators, int width);

/// C(n, k) from a Pascal triangle up to n = 64; 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// K_j(x; n) = sum_s (-1)^s C(x, s) C(n - x, j - s), n <= 64.
std::int64_t krawtchouk(int n, int j, int x);

struct WeightDistribution {
  /// counts[i] = number of codewords of weight i, i = 0..length.
  std::vector<std::uint64_t> counts;

  int length() const { return static_cast<int>(counts.size()) - 1; }
  std::uint64_t total() const;
};

/// Weight distribution of the dual of a linear code of dimension `code_dim`.
WeightDistribution macwilliams_dual(const WeightDistribution& weights, int code_dim);

}  // namespace fracfac::gf2
