#pragma once

// Executable checks of the doubling / maximality / projection identities,
// run over the built-in corpus or a single design. Backs `fracfac verify`.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fracfac/corpus.hpp"
#include "fracfac/design.hpp"
#include "fracfac/search.hpp"

namespace fracfac {

struct LawCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LawReport {
  std::string law;
  std::vector<LawCase> cases;

  bool passed() const;
  std::size_t failures() const;
};

struct LawOptions {
  /// Replaces the corpus for the per-design laws (thm2.1, thm2.2, thm2.3,
  /// thm3.2, thm3.3) and is paired with same-shape corpus designs for cor2.4.
  std::optional<RegularDesign> design;
  int t_max = 12;
  int samples = 200;
  std::uint64_t seed = kCorpusSeed;
};

/// thm2.1 thm2.2 thm2.3 cor2.4 thm3.2 thm3.3 cor3.6 thm4.1-ineq eq4-objective
const std::vector<std::string>& law_names();

/// Throws Domain for an unknown law.
LawReport run_law(std::string_view law, const LawOptions& options = {});

/// Sum of m(v)^2 over ambient vectors v that are not columns; defined for
/// projections of any rank.
std::uint64_t nonmain_sum_squares(const RegularDesign& d);

/// Random deletions from family_5N16(t) leaving at least one factor.
DeletionSpec random_deletion_spec(std::mt19937_64& rng, int t);

}  // namespace fracfac
