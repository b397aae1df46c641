#pragma once

// Constructions as column transformations. Doubling and foldover append a
// coordinate; projection keeps the ambient k.

#include <vector>

#include "fracfac/design.hpp"

namespace fracfac {

/// D(X) = [X X; X -X]. Each column c yields c|0 (the "+" copy) and c|1 (the
/// "-" copy); all "+" columns come first in input order, then all "-".
RegularDesign doubled(const RegularDesign& d);
/// t-fold doubling; t = 0 returns the input.
RegularDesign doubled_n(const RegularDesign& d, int t);

/// Restriction to the 0-based column indices in `keep`, input order preserved.
RegularDesign project(const RegularDesign& d, std::vector<int> keep);
/// Complement of `drop` (0-based).
RegularDesign project_drop(const RegularDesign& d, std::vector<int> drop);

/// [X; -X]: every column gets a trailing 1. With `add_new_factor`, the block
/// indicator column (0, ..., 0, 1) is appended last.
RegularDesign foldover(const RegularDesign& d, bool add_new_factor);

RegularDesign full_factorial(int k);
/// All 2^k - 1 nonzero columns.
RegularDesign saturated_res3(int k);
/// All 2^(k-1) columns whose first coordinate is 1.
RegularDesign saturated_res4(int k);

/// The 2^{5-1} with I = ABCDE.
RegularDesign design_2_5_1();
/// The unique 32-run, 9-factor maximal resolution IV design (frozen data).
RegularDesign design_2_9_4();
/// t-fold double of the 2^{5-1}: n = 5 * 2^t, N = 16 * 2^t.
RegularDesign family_5N16(int t);
/// t-fold double of the 2^{9-4}: n = 9 * 2^t, N = 32 * 2^t.
RegularDesign family_9N32(int t);

/// Wordlength pattern of D(X) predicted from that of X (n factors), for
/// word lengths 1..2n. Valid for designs of resolution >= III.
WordlengthPattern doubled_wordlength_pattern(const WordlengthPattern& w, int n);

}  // namespace fracfac
