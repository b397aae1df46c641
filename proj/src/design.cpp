#include "fracfac/design.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>

#include "wide_bits.hpp"

namespace fracfac {

namespace {

constexpr int kMaxTallyWidth = 24;
constexpr int kMaxRunWidth = 16;
constexpr int kMaxOracleWidth = 12;
constexpr int kMaxOracleStrength = 4;

std::string describe(const BitVec& v) { return v.to_string(); }

// Pivot table for incremental elimination, remembering which inputs were
// combined into each stored vector.
struct Eliminator {
  struct Row {
    std::uint32_t value = 0;
    detail::WideBits combo;
  };
  std::array<Row, 32> pivots{};
  std::array<bool, 32> used{};

  // Returns the combination of inputs that reduces `v` to zero, or nothing if
  // `v` was independent (and is now stored as a pivot).
  std::optional<detail::WideBits> insert(std::uint32_t v, detail::WideBits combo) {
    while (v != 0) {
      const int lead = 31 - std::countl_zero(v);
      if (!used[lead]) {
        used[lead] = true;
        pivots[lead] = Row{v, std::move(combo)};
        return std::nullopt;
      }
      v ^= pivots[lead].value;
      combo ^= pivots[lead].combo;
    }
    return combo;
  }
};

}  // namespace

RegularDesign RegularDesign::from_columns(int k, std::vector<BitVec> columns) {
  if (k < 1 || k > gf2::kMaxWidth) {
    throw Error(ErrorKind::SizeLimit, "run-size exponent k=" + std::to_string(k) +
                                          " outside [1, 32]");
  }
  if (columns.empty()) throw Error(ErrorKind::Domain, "a design needs at least one factor");
  if (k < 32 && columns.size() > (std::uint64_t{1} << k) - 1) {
    throw Error(ErrorKind::Capacity, std::to_string(columns.size()) +
                                         " factors exceed the 2^k - 1 distinct nonzero columns");
  }
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const auto& c = columns[i];
    if (c.width() != k) {
      throw Error(ErrorKind::DimensionMismatch,
                  "column " + std::to_string(i + 1) + " has width " + std::to_string(c.width()) +
                      ", expected " + std::to_string(k));
    }
    if (c.is_zero()) {
      throw Error(ErrorKind::ResolutionBelowII,
                  "column " + std::to_string(i + 1) + " is zero (" + describe(c) + ")");
    }
    if (!seen.insert(c.bits()).second) {
      throw Error(ErrorKind::ResolutionBelowIII,
                  "column " + std::to_string(i + 1) + " duplicates an earlier column (" +
                      describe(c) + ")");
    }
  }
  const int r = gf2::rank(columns);
  return RegularDesign(k, std::move(columns), r);
}

RegularDesign RegularDesign::from_generator_words(int n_basic,
                                                  const std::vector<std::vector<int>>& added) {
  if (n_basic < 1 || n_basic > gf2::kMaxWidth) {
    throw Error(ErrorKind::SizeLimit, "number of basic factors outside [1, 32]");
  }
  std::vector<BitVec> columns;
  for (int i = 1; i <= n_basic; ++i) columns.push_back(BitVec::unit(n_basic, i));
  for (const auto& word : added) {
    if (word.empty()) {
      throw Error(ErrorKind::InvalidGenerator, "added factor with an empty generator");
    }
    BitVec c = BitVec::zero(n_basic);
    for (int index : word) {
      if (index < 1 || index > n_basic) {
        throw Error(ErrorKind::InvalidGenerator,
                    "generator index " + std::to_string(index) + " outside 1.." +
                        std::to_string(n_basic));
      }
      c ^= BitVec::unit(n_basic, index);
    }
    columns.push_back(c);
  }
  return from_columns(n_basic, std::move(columns));
}

std::uint64_t WordlengthPattern::total() const noexcept {
  std::uint64_t t = 0;
  for (auto b : words) t += b;
  return t;
}

WordlengthPattern wordlength_pattern_direct(const RegularDesign& d) {
  const int n = d.factors();
  if (d.p() > gf2::kMaxSpanDim) {
    throw Error(ErrorKind::SizeLimit, "p=" + std::to_string(d.p()) +
                                          " exceeds the direct enumeration cap of 26; use "
                                          "wordlength_pattern_fast");
  }
  Eliminator elim;
  std::vector<detail::WideBits> kernel;
  for (int i = 0; i < n; ++i) {
    detail::WideBits combo(n);
    combo.set(i);
    if (auto word = elim.insert(d.column(i).bits(), std::move(combo))) {
      kernel.push_back(std::move(*word));
    }
  }
  WordlengthPattern w;
  w.words.assign(static_cast<std::size_t>(n), 0);
  detail::WideBits current(n);
  const std::uint64_t size = std::uint64_t{1} << kernel.size();
  for (std::uint64_t i = 1; i < size; ++i) {
    current ^= kernel[static_cast<std::size_t>(std::countr_zero(i))];
    ++w.words[static_cast<std::size_t>(current.popcount() - 1)];
  }
  return w;
}

WordlengthPattern wordlength_pattern_fast(const RegularDesign& d) {
  if (d.rank() > gf2::kMaxSpanDim) {
    throw Error(ErrorKind::SizeLimit, "rank exceeds the 2^26 codeword enumeration cap");
  }
  if (d.factors() > gf2::kMaxBinomial) {
    throw Error(ErrorKind::SizeLimit, "MacWilliams route limited to n <= 64 factors");
  }
  const RegularDesign full = d.rank() < d.k() ? reembed(d) : d;
  const int n = full.factors();
  const int k = full.k();
  std::vector<detail::WideBits> rows(static_cast<std::size_t>(k), detail::WideBits(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (full.column(i).coord(j)) rows[static_cast<std::size_t>(j - 1)].set(i);
    }
  }
  gf2::WeightDistribution code;
  code.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  detail::WideBits current(n);
  code.counts[0] = 1;
  const std::uint64_t size = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < size; ++i) {
    current ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    ++code.counts[static_cast<std::size_t>(current.popcount())];
  }
  const auto dual = gf2::macwilliams_dual(code, k);
  WordlengthPattern w;
  w.words.assign(dual.counts.begin() + 1, dual.counts.end());
  return w;
}

WordlengthPattern wordlength_pattern(const RegularDesign& d) {
  const bool fast_ok = d.rank() <= gf2::kMaxSpanDim && d.factors() <= gf2::kMaxBinomial;
  if (fast_ok && (d.rank() <= d.p() || d.p() > gf2::kMaxSpanDim)) {
    return wordlength_pattern_fast(d);
  }
  return wordlength_pattern_direct(d);
}

std::optional<int> resolution(const WordlengthPattern& w) {
  for (int i = 1; i <= w.length(); ++i) {
    if (w.B(i) > 0) return i;
  }
  return std::nullopt;
}

std::optional<int> resolution(const RegularDesign& d) {
  if (d.p() == 0) return std::nullopt;
  return resolution(wordlength_pattern(d));
}

int oa_strength(const RegularDesign& d) {
  const auto r = resolution(d);
  return r ? *r - 1 : d.factors();
}

AliasProfile::AliasProfile(int k, std::vector<AliasEntry> entries)
    : k_(k), entries_(std::move(entries)) {
  for (std::size_t v = 1; v < entries_.size(); ++v) {
    if (!entries_[v].has_main_effect) ++f_;
  }
}

const AliasEntry& AliasProfile::at(const BitVec& v) const {
  if (v.width() != k_ || v.is_zero()) {
    throw Error(ErrorKind::Domain, "alias sets are indexed by nonzero width-k vectors");
  }
  return entries_.at(v.bits());
}

std::vector<std::uint64_t> AliasProfile::nonmain_multiset() const {
  std::vector<std::uint64_t> out;
  for (std::size_t v = 1; v < entries_.size(); ++v) {
    if (!entries_[v].has_main_effect) out.push_back(entries_[v].m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> AliasProfile::main_multiset() const {
  std::vector<std::uint64_t> out;
  for (std::size_t v = 1; v < entries_.size(); ++v) {
    if (entries_[v].has_main_effect) out.push_back(entries_[v].m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BitVec> AliasProfile::canonical_order() const {
  std::vector<BitVec> out;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t v = 1; v < entries_.size(); ++v) {
      if (entries_[v].has_main_effect == (pass == 1)) {
        out.emplace_back(k_, static_cast<std::uint32_t>(v));
      }
    }
  }
  return out;
}

std::uint64_t AliasProfile::total_pairs() const {
  std::uint64_t t = 0;
  for (std::size_t v = 1; v < entries_.size(); ++v) t += entries_[v].m;
  return t;
}

std::uint64_t AliasProfile::sum_squares() const {
  std::uint64_t t = 0;
  for (std::size_t v = 1; v < entries_.size(); ++v) t += entries_[v].m * entries_[v].m;
  return t;
}

std::uint64_t AliasProfile::nonmain_sum() const {
  std::uint64_t t = 0;
  for (std::size_t v = 1; v < entries_.size(); ++v) {
    if (!entries_[v].has_main_effect) t += entries_[v].m;
  }
  return t;
}

std::uint64_t AliasProfile::nonmain_sum_squares() const {
  std::uint64_t t = 0;
  for (std::size_t v = 1; v < entries_.size(); ++v) {
    if (!entries_[v].has_main_effect) t += entries_[v].m * entries_[v].m;
  }
  return t;
}

std::vector<std::uint64_t> pair_tally(const RegularDesign& d) {
  if (d.k() > kMaxTallyWidth) {
    throw Error(ErrorKind::SizeLimit, "alias tally limited to k <= 24");
  }
  std::vector<std::uint64_t> m(std::size_t{1} << d.k(), 0);
  const auto& cols = d.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      ++m[cols[i].bits() ^ cols[j].bits()];
    }
  }
  return m;
}

AliasProfile alias_profile(const RegularDesign& d) {
  if (d.rank() < d.k()) {
    throw Error(ErrorKind::ReducedRank, "columns span rank " + std::to_string(d.rank()) +
                                            " < k=" + std::to_string(d.k()) +
                                            "; reembed the design first");
  }
  const auto m = pair_tally(d);
  std::vector<AliasEntry> entries(m.size());
  for (std::size_t v = 1; v < m.size(); ++v) entries[v].m = m[v];
  for (const auto& c : d.columns()) entries[c.bits()].has_main_effect = true;
  return AliasProfile(d.k(), std::move(entries));
}

B3B4 b3_b4_from_profile(const AliasProfile& profile, int n) {
  const auto pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const auto b3_times3 = pairs - static_cast<std::int64_t>(profile.nonmain_sum());
  const auto b4_times6 = static_cast<std::int64_t>(profile.sum_squares()) - pairs;
  if (b3_times3 < 0 || b3_times3 % 3 != 0 || b4_times6 < 0 || b4_times6 % 6 != 0) {
    throw Error(ErrorKind::Inconsistent,
                "alias profile does not belong to a regular design with n=" + std::to_string(n));
  }
  return B3B4{static_cast<std::uint64_t>(b3_times3 / 3), static_cast<std::uint64_t>(b4_times6 / 6)};
}

bool is_even(const RegularDesign& d) {
  if (d.k() >= gf2::kMaxWidth) return is_even(wordlength_pattern(d));
  // 1 is in the row space iff appending a constant coordinate keeps the rank.
  std::vector<BitVec> augmented;
  augmented.reserve(d.columns().size());
  for (const auto& c : d.columns()) augmented.push_back(c.extended(true));
  return gf2::rank(augmented) == d.rank();
}

bool is_even(const WordlengthPattern& w) {
  for (int i = 1; i <= w.length(); i += 2) {
    if (w.B(i) != 0) return false;
  }
  return true;
}

RunMatrix expand_runs(const RegularDesign& d) {
  if (d.k() > kMaxRunWidth) {
    throw Error(ErrorKind::SizeLimit, "run expansion limited to k <= 16");
  }
  RunMatrix x;
  x.rows = static_cast<int>(d.runs());
  x.cols = d.factors();
  x.entries.resize(static_cast<std::size_t>(x.rows) * static_cast<std::size_t>(x.cols));
  for (int r = 0; r < x.rows; ++r) {
    for (int c = 0; c < x.cols; ++c) {
      const bool odd = (std::popcount(static_cast<std::uint32_t>(r) & d.column(c).bits()) & 1) != 0;
      x.entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(x.cols) +
                static_cast<std::size_t>(c)] = odd ? -1 : 1;
    }
  }
  return x;
}

bool strength_oracle(const RegularDesign& d, int t) {
  if (d.k() > kMaxOracleWidth || t > kMaxOracleStrength) {
    throw Error(ErrorKind::SizeLimit, "strength oracle limited to k <= 12 and t <= 4");
  }
  if (t < 1 || t > d.factors()) {
    throw Error(ErrorKind::Domain, "strength t must lie in [1, n]");
  }
  const auto x = expand_runs(d);
  const int n = x.cols;
  const int expected = x.rows >> t;
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> counts(std::size_t{1} << t);
  while (true) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int r = 0; r < x.rows; ++r) {
      unsigned pattern = 0;
      for (int i = 0; i < t; ++i) {
        pattern = (pattern << 1) | static_cast<unsigned>(x.at(r, idx[static_cast<std::size_t>(i)]) < 0);
      }
      ++counts[pattern];
    }
    for (int c : counts) {
      if (c != expected) return false;
    }
    int i = t - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return true;
}

RegularDesign reembed(const RegularDesign& d) {
  const int r = d.rank();
  // Basis: the first independent columns in order; coords[b] = the
  // combination of basis columns (bit j <-> basis element j) equal to pivot b.
  std::array<std::uint32_t, 32> pivot{};
  std::array<std::uint32_t, 32> coords{};
  std::array<bool, 32> used{};
  int found = 0;
  std::vector<std::uint32_t> expressed;
  expressed.reserve(d.columns().size());
  for (const auto& col : d.columns()) {
    std::uint32_t v = col.bits();
    std::uint32_t combo = 0;
    while (v != 0) {
      const int lead = 31 - std::countl_zero(v);
      if (!used[lead]) break;
      v ^= pivot[lead];
      combo ^= coords[lead];
    }
    if (v != 0) {
      const int lead = 31 - std::countl_zero(v);
      used[lead] = true;
      pivot[lead] = v;
      // v = col + (combination reduced so far), so col's own coordinate is
      // the new basis element and the pivot carries both.
      coords[lead] = combo ^ (1u << found);
      combo = 1u << found;
      ++found;
    }
    expressed.push_back(combo);
  }
  std::vector<BitVec> columns;
  columns.reserve(expressed.size());
  for (auto combo : expressed) {
    // basis element j (0-based) becomes coordinate j + 1.
    std::uint32_t bits = 0;
    for (int j = 0; j < r; ++j) {
      if ((combo >> j) & 1u) bits |= 1u << (r - 1 - j);
    }
    columns.emplace_back(r, bits);
  }
  return RegularDesign::from_columns(r, std::move(columns));
}

}  // namespace fracfac
