#pragma once

// Built-in design corpus used by `fracfac verify` and the test suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fracfac/design.hpp"

namespace fracfac {

struct CorpusEntry {
  std::string name;
  RegularDesign design;
};

/// Seed of the random part of the built-in corpus.
inline constexpr std::uint64_t kCorpusSeed = 0x2006'0546'0001ull;

/// Full factorials (k <= 4), the 2^{4-1} and 2^{5-1}, saturated designs of
/// resolution III (k <= 5) and IV (k = 3..5), family_5N16(t <= 2),
/// family_9N32(t <= 1), and 50 seeded random full-rank designs: 25 of
/// resolution >= III and 25 of resolution >= IV with k in {4, 5, 6}, p <= 6.
const std::vector<CorpusEntry>& builtin_corpus();

/// Distinct random nonzero columns, retried until full rank.
RegularDesign random_resolution_iii(std::mt19937_64& rng, int k, int n);
/// Random columns avoiding all pairwise sums, retried until full rank.
RegularDesign random_resolution_iv(std::mt19937_64& rng, int k, int n);
/// A uniformly chosen n-column projection of `base`.
RegularDesign random_projection(std::mt19937_64& rng, const RegularDesign& base, int n);

}  // namespace fracfac
