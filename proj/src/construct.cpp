#include "fracfac/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fracfac {

namespace {

void check_extend(const RegularDesign& d, int extra) {
  if (d.k() + extra > gf2::kMaxWidth) {
    throw Error(ErrorKind::SizeLimit, "k=" + std::to_string(d.k()) + " cannot grow by " +
                                          std::to_string(extra) + " beyond 32");
  }
}

void check_indices(const RegularDesign& d, std::vector<int>& idx, const char* what) {
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw Error(ErrorKind::Domain, std::string(what) + " list repeats an index");
  }
  for (int i : idx) {
    if (i < 0 || i >= d.factors()) {
      throw Error(ErrorKind::Domain, std::string(what) + " index " + std::to_string(i + 1) +
                                         " outside 1.." + std::to_string(d.factors()));
    }
  }
}

}  // namespace

RegularDesign doubled(const RegularDesign& d) {
  check_extend(d, 1);
  std::vector<BitVec> cols;
  cols.reserve(d.columns().size() * 2);
  for (const auto& c : d.columns()) cols.push_back(c.extended(false));
  for (const auto& c : d.columns()) cols.push_back(c.extended(true));
  return RegularDesign::from_columns(d.k() + 1, std::move(cols));
}

RegularDesign doubled_n(const RegularDesign& d, int t) {
  if (t < 0) throw Error(ErrorKind::Domain, "doubling count must be nonnegative");
  check_extend(d, t);
  RegularDesign out = d;
  for (int i = 0; i < t; ++i) out = doubled(out);
  return out;
}

RegularDesign project(const RegularDesign& d, std::vector<int> keep) {
  if (keep.empty()) throw Error(ErrorKind::Domain, "projection onto no factors");
  check_indices(d, keep, "keep");
  std::vector<BitVec> cols;
  cols.reserve(keep.size());
  for (int i : keep) cols.push_back(d.column(i));
  return RegularDesign::from_columns(d.k(), std::move(cols));
}

RegularDesign project_drop(const RegularDesign& d, std::vector<int> drop) {
  check_indices(d, drop, "drop");
  std::vector<int> keep;
  for (int i = 0; i < d.factors(); ++i) {
    if (!std::binary_search(drop.begin(), drop.end(), i)) keep.push_back(i);
  }
  return project(d, std::move(keep));
}

RegularDesign foldover(const RegularDesign& d, bool add_new_factor) {
  check_extend(d, 1);
  std::vector<BitVec> cols;
  cols.reserve(d.columns().size() + 1);
  for (const auto& c : d.columns()) cols.push_back(c.extended(true));
  if (add_new_factor) cols.push_back(BitVec::zero(d.k()).extended(true));
  return RegularDesign::from_columns(d.k() + 1, std::move(cols));
}

RegularDesign full_factorial(int k) {
  if (k < 1 || k > gf2::kMaxWidth) throw Error(ErrorKind::Domain, "full factorial needs 1 <= k <= 32");
  std::vector<BitVec> cols;
  for (int i = 1; i <= k; ++i) cols.push_back(BitVec::unit(k, i));
  return RegularDesign::from_columns(k, std::move(cols));
}

RegularDesign saturated_res3(int k) {
  if (k < 2) throw Error(ErrorKind::Domain, "saturated resolution III design needs k >= 2");
  if (k > 20) throw Error(ErrorKind::SizeLimit, "saturated resolution III design limited to k <= 20");
  std::vector<BitVec> cols;
  for (std::uint32_t v = 1; v < (1u << k); ++v) cols.emplace_back(k, v);
  return RegularDesign::from_columns(k, std::move(cols));
}

RegularDesign saturated_res4(int k) {
  if (k < 3) throw Error(ErrorKind::Domain, "saturated resolution IV design needs k >= 3");
  if (k > 20) throw Error(ErrorKind::SizeLimit, "saturated resolution IV design limited to k <= 20");
  std::vector<BitVec> cols;
  for (std::uint32_t v = 1u << (k - 1); v < (1u << k); ++v) cols.emplace_back(k, v);
  return RegularDesign::from_columns(k, std::move(cols));
}

RegularDesign design_2_5_1() { return RegularDesign::from_generator_words(4, {{1, 2, 3, 4}}); }

RegularDesign design_2_9_4() {
  // Canonical form of the single n = 9 class found by
  // enumerate_maximal(5, 9, 9); a regeneration test keeps the two in step.
  static const char* const kColumns[] = {"00001", "00010", "00100", "00111", "01000",
                                         "01011", "01101", "10000", "11110"};
  std::vector<BitVec> cols;
  for (const char* s : kColumns) cols.push_back(BitVec::from_string(s));
  return RegularDesign::from_columns(5, std::move(cols));
}

RegularDesign family_5N16(int t) { return doubled_n(design_2_5_1(), t); }

RegularDesign family_9N32(int t) { return doubled_n(design_2_9_4(), t); }

WordlengthPattern doubled_wordlength_pattern(const WordlengthPattern& w, int n) {
  if (w.length() != n) throw Error(ErrorKind::DimensionMismatch, "pattern length differs from n");
  if (n > gf2::kMaxBinomial) throw Error(ErrorKind::SizeLimit, "transform limited to n <= 64");
  WordlengthPattern out;
  out.words.assign(static_cast<std::size_t>(2 * n), 0);
  for (int len = 1; len <= 2 * n; ++len) {
    // s pairs A+A- plus a defining word of X of length len - 2s.
    const int s_max = std::min(len % 2 == 1 ? (len - 1) / 2 : len / 2 - 1, n);
    unsigned __int128 sum = 0;
    for (int s = 0; s <= s_max; ++s) {
      const int word = len - 2 * s;
      if (word > n || w.B(word) == 0) continue;
      sum += static_cast<unsigned __int128>(w.B(word)) * gf2::binomial(n - word, s) *
             (static_cast<unsigned __int128>(1) << (word - 1));
    }
    if (len % 2 == 0 && (len / 2) % 2 == 0) sum += gf2::binomial(n, len / 2);
    if (sum > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw Error(ErrorKind::SizeLimit, "doubled word count overflows 64 bits");
    }
    out.words[static_cast<std::size_t>(len - 1)] = static_cast<std::uint64_t>(sum);
  }
  return out;
}

}  // namespace fracfac
