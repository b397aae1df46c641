#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fracfac/analyze.hpp"
#include "fracfac/design.hpp"

namespace fracfac {

/// Lexicographic order on (B_1, B_2, ...), shorter patterns padded with 0.
/// `less` means less aberration.
std::strong_ordering ma_compare(const WordlengthPattern& w1, const WordlengthPattern& w2);

// ---------------------------------------------------------------------------
// Census of maximal designs

struct MaximalCensus {
  int k = 0;
  int n_min = 0;
  int n_max = 0;
  /// One canonical form per isomorphism class, sorted by (n, form).
  std::vector<CanonicalForm> classes;
  /// Backtracking nodes (partial column sets) visited.
  std::uint64_t visited = 0;
  /// Labelled maximal column sets found before isomorph rejection.
  std::uint64_t labelled = 0;
  /// Pairs of distinct classes that share a fingerprint.
  std::uint64_t fingerprint_collisions = 0;
};

/// All isomorphism classes of maximal resolution >= IV designs with
/// 2^k runs and n_min <= n <= n_max factors. k <= 5.
MaximalCensus enumerate_maximal(int k, int n_min, int n_max);

// ---------------------------------------------------------------------------
// Minimum aberration projections

inline constexpr std::uint64_t kDefaultVisitBudget = 100'000'000;

struct ProjectionWinner {
  std::vector<int> keep;  // 0-based columns of the base
  RegularDesign design;
};

struct SearchReport {
  int base_factors = 0;
  int n = 0;
  int k = 0;
  WordlengthPattern best_wlp;
  /// Every optimal subset, or one representative per class when deduplicated
  /// (isomorphism classes for k <= 5, fingerprint classes above).
  std::vector<ProjectionWinner> winners;
  std::uint64_t optimal_subsets = 0;
  std::uint64_t visited = 0;
  bool ties = false;
  bool deduplicated = false;
};

SearchReport ma_projection_search(const RegularDesign& base, int n, bool dedupe,
                                  std::uint64_t budget = kDefaultVisitBudget);

// ---------------------------------------------------------------------------
// Deletions from X* = family_5N16(t)
//
// Factor X^j of X* (X one of the five factors A..E of the 2^{5-1}) is indexed
// by a t-bit vector j whose coordinate i is 1 when the i-th doubling took the
// "-" copy. The componentwise product of two +-1 index vectors corresponds to
// the XOR of these bit vectors, and the all-(+1) vector to zero.

struct DeletionSpec {
  int t = 1;
  std::array<std::vector<BitVec>, 5> deleted;

  int total() const;
};

/// Throws Domain unless t >= 1, vectors have width t, and each group lists
/// distinct vectors.
void validate(const DeletionSpec& spec);

/// 0-based column index in family_5N16(t) of factor `group`^j.
int xstar_column_index(int t, int group, const BitVec& j);

/// family_5N16(t) with the listed factors removed.
RegularDesign apply_deletion(const DeletionSpec& spec);

/// Sum over the 10 group pairs and all k of (2^t - n_X - n_Y + n^k_XY)^2 plus
/// the sum over k != 0 of (5 * 2^(t-1) - u + sum_X n^k_XX)^2.
std::int64_t deletion_objective(const DeletionSpec& spec);

/// The non-main-effect alias sets of X*, labelled by origin.
struct GroupedAliasIndex {
  int t = 1;
  /// (group pair X < Y, k) -> alias-set representative, for all 2^t k.
  std::map<std::pair<std::pair<int, int>, std::uint32_t>, BitVec> between;
  /// k -> representative, for k != 0.
  std::map<std::uint32_t, BitVec> within;
};

GroupedAliasIndex grouped_alias_index(int t);

struct InequalityWitness {
  int t = 0;
  std::int64_t u = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  /// Upper bound on sum m^2 for u deletions within one group of X*.
  std::int64_t rhs_upper = 0;
  /// Lower bound for projections of the saturated design, as a reduced
  /// fraction.
  std::int64_t rhs_lower_num = 0;
  std::int64_t rhs_lower_den = 1;
  bool holds = false;
  /// C(u,2) + u(2^t - u) == (2u - a) 2^(t-1) - b.
  bool deleted_pairs_identity = false;
};

/// For every t in [t_min, t_max] and 0 <= u <= 2^(t-1). 2 <= t_min, t_max <= 13.
std::vector<InequalityWitness> verify_thm41_inequality(int t_min, int t_max);

// ---------------------------------------------------------------------------
// Doubling identities

/// Alias-set counts of the double against those predicted from d.
bool verify_thm22(const RegularDesign& d);
/// Predicted wordlength pattern of the double against the computed one.
bool verify_thm23(const RegularDesign& d);

}  // namespace fracfac
