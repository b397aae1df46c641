#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fracfac/gf2.hpp"

namespace fracfac {

using gf2::BitVec;

/// A regular two-level design: N = 2^k runs, one nonzero k-bit column per
/// factor. Columns are pairwise distinct, so the design has resolution >= III.
class RegularDesign {
 public:
  static RegularDesign from_columns(int k, std::vector<BitVec> columns);

  /// Basic factors get e_1..e_{n_basic}; each added factor is the product of
  /// the listed basic factors (1-based indices), e.g. {1,2,3,4} for E = ABCD.
  static RegularDesign from_generator_words(int n_basic,
                                            const std::vector<std::vector<int>>& added);

  int k() const noexcept { return k_; }
  std::uint64_t runs() const noexcept { return std::uint64_t{1} << k_; }
  int factors() const noexcept { return static_cast<int>(columns_.size()); }
  int rank() const noexcept { return rank_; }
  /// Number of independent defining words (the p of a 2^{n-p} design).
  int p() const noexcept { return factors() - rank_; }

  const std::vector<BitVec>& columns() const noexcept { return columns_; }
  const BitVec& column(int index) const { return columns_.at(static_cast<std::size_t>(index)); }

  friend bool operator==(const RegularDesign&, const RegularDesign&) = default;

 private:
  RegularDesign(int k, std::vector<BitVec> columns, int rank)
      : k_(k), columns_(std::move(columns)), rank_(rank) {}

  int k_ = 0;
  std::vector<BitVec> columns_;
  int rank_ = 0;
};

/// B_1..B_n, stored to full length n.
struct WordlengthPattern {
  std::vector<std::uint64_t> words;

  int length() const noexcept { return static_cast<int>(words.size()); }
  /// B_i, 1-based; zero beyond the stored length.
  std::uint64_t B(int i) const noexcept {
    return (i >= 1 && i <= length()) ? words[static_cast<std::size_t>(i - 1)] : 0;
  }
  std::uint64_t total() const noexcept;

  friend bool operator==(const WordlengthPattern&, const WordlengthPattern&) = default;
};

/// Counts words by enumerating the defining contrast subgroup. p <= 26.
WordlengthPattern wordlength_pattern_direct(const RegularDesign& d);
/// Enumerates the 2^rank codewords of the row code, then MacWilliams.
/// rank <= 26 and n <= 64.
WordlengthPattern wordlength_pattern_fast(const RegularDesign& d);
/// Whichever of the two routes is cheaper and within its caps.
WordlengthPattern wordlength_pattern(const RegularDesign& d);

/// Length of the shortest defining word; nullopt for a full factorial.
std::optional<int> resolution(const RegularDesign& d);
std::optional<int> resolution(const WordlengthPattern& w);
/// resolution - 1, or n when there are no defining words.
int oa_strength(const RegularDesign& d);

struct AliasEntry {
  std::uint64_t m = 0;
  bool has_main_effect = false;
};

/// Two-factor-interaction counts per alias set. Alias sets are indexed by
/// their representative vector v (any nonzero k-bit vector).
class AliasProfile {
 public:
  AliasProfile(int k, std::vector<AliasEntry> entries);

  int k() const noexcept { return k_; }
  int g() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  int f() const noexcept { return f_; }
  const AliasEntry& at(const BitVec& v) const;
  const AliasEntry& at(std::uint32_t v) const { return entries_.at(v); }

  /// Sorted ascending.
  std::vector<std::uint64_t> nonmain_multiset() const;
  std::vector<std::uint64_t> main_multiset() const;
  /// Non-main-effect sets first, then main-effect sets, each by v.
  std::vector<BitVec> canonical_order() const;

  std::uint64_t total_pairs() const;
  std::uint64_t sum_squares() const;
  std::uint64_t nonmain_sum() const;
  std::uint64_t nonmain_sum_squares() const;

 private:
  int k_;
  std::vector<AliasEntry> entries_;
  int f_ = 0;
};

/// m(v) for every v in the ambient space (index 0 unused). No rank
/// requirement, so it also describes projections that lost rank. k <= 24.
std::vector<std::uint64_t> pair_tally(const RegularDesign& d);

/// Requires rank == k; see reembed().
AliasProfile alias_profile(const RegularDesign& d);

struct B3B4 {
  std::uint64_t b3 = 0;
  std::uint64_t b4 = 0;
  friend bool operator==(const B3B4&, const B3B4&) = default;
};

B3B4 b3_b4_from_profile(const AliasProfile& profile, int n);

/// True iff the all-ones vector lies in the row space of the column matrix.
bool is_even(const RegularDesign& d);
/// True iff every odd-length B_i is zero.
bool is_even(const WordlengthPattern& w);

struct RunMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int8_t> entries;  // row-major, +1 / -1

  int at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(c)];
  }
};

/// Row r has entry (-1)^<r, c> for column c, reading r's binary digits as
/// coordinates 1..k (coordinate 1 most significant). k <= 16.
RunMatrix expand_runs(const RegularDesign& d);

/// True iff every t-column projection of the run matrix shows all 2^t level
/// combinations equally often. k <= 12, 1 <= t <= min(4, n).
bool strength_oracle(const RegularDesign& d, int t);

/// Rewrites the columns in a basis of their span so that k' = rank.
RegularDesign reembed(const RegularDesign& d);

}  // namespace fracfac
