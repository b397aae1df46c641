#include "fracfac/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "fracfac/construct.hpp"

namespace fracfac {

namespace {

constexpr int kMaxAttempts = 10'000;

std::uint32_t draw(std::mt19937_64& rng, std::uint32_t bound) {
  return static_cast<std::uint32_t>(rng() % bound);
}

}  // namespace

RegularDesign random_resolution_iii(std::mt19937_64& rng, int k, int n) {
  if (k < 1 || k > 16 || n < k || n > (1 << k) - 1) {
    throw Error(ErrorKind::Domain, "random resolution III design needs k <= n <= 2^k - 1");
  }
  std::vector<std::uint32_t> pool((1u << k) - 1);
  std::iota(pool.begin(), pool.end(), 1u);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (int i = 0; i < n; ++i) {
      std::swap(pool[static_cast<std::size_t>(i)],
                pool[static_cast<std::size_t>(i) + draw(rng, static_cast<std::uint32_t>(pool.size()) - static_cast<std::uint32_t>(i))]);
    }
    std::vector<BitVec> cols;
    for (int i = 0; i < n; ++i) cols.emplace_back(k, pool[static_cast<std::size_t>(i)]);
    if (gf2::rank(cols) == k) return RegularDesign::from_columns(k, std::move(cols));
  }
  throw Error(ErrorKind::Domain, "could not draw a full-rank design");
}

RegularDesign random_resolution_iv(std::mt19937_64& rng, int k, int n) {
  if (k < 1 || k > 16 || n < k || n > (1 << (k - 1))) {
    throw Error(ErrorKind::Domain, "random resolution IV design needs k <= n <= 2^(k-1)");
  }
  const std::uint32_t points = 1u << k;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<bool> blocked(points, false);
    blocked[0] = true;
    std::vector<std::uint32_t> chosen;
    while (static_cast<int>(chosen.size()) < n) {
      std::vector<std::uint32_t> free;
      for (std::uint32_t v = 1; v < points; ++v) {
        if (!blocked[v]) free.push_back(v);
      }
      if (free.empty()) break;
      const auto v = free[draw(rng, static_cast<std::uint32_t>(free.size()))];
      blocked[v] = true;
      for (auto c : chosen) blocked[c ^ v] = true;
      chosen.push_back(v);
    }
    if (static_cast<int>(chosen.size()) < n) continue;
    std::vector<BitVec> cols;
    for (auto v : chosen) cols.emplace_back(k, v);
    if (gf2::rank(cols) == k) return RegularDesign::from_columns(k, std::move(cols));
  }
  throw Error(ErrorKind::Domain, "could not draw a full-rank resolution IV design");
}

RegularDesign random_projection(std::mt19937_64& rng, const RegularDesign& base, int n) {
  std::vector<int> idx(static_cast<std::size_t>(base.factors()));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < n; ++i) {
    std::swap(idx[static_cast<std::size_t>(i)],
              idx[static_cast<std::size_t>(i) + draw(rng, static_cast<std::uint32_t>(idx.size()) - static_cast<std::uint32_t>(i))]);
  }
  idx.resize(static_cast<std::size_t>(n));
  return project(base, std::move(idx));
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (int k = 1; k <= 4; ++k) out.push_back({"full_factorial(" + std::to_string(k) + ")", full_factorial(k)});
    out.push_back({"2^(4-1) I=ABCD", RegularDesign::from_generator_words(3, {{1, 2, 3}})});
    out.push_back({"2^(5-1) I=ABCDE", design_2_5_1()});
    for (int k = 2; k <= 5; ++k) out.push_back({"saturated_res3(" + std::to_string(k) + ")", saturated_res3(k)});
    for (int k = 3; k <= 5; ++k) out.push_back({"saturated_res4(" + std::to_string(k) + ")", saturated_res4(k)});
    for (int t = 1; t <= 2; ++t) out.push_back({"family_5N16(" + std::to_string(t) + ")", family_5N16(t)});
    for (int t = 0; t <= 1; ++t) out.push_back({"family_9N32(" + std::to_string(t) + ")", family_9N32(t)});

    // (k, n) shapes repeat so that same-shape pairs are plentiful.
    struct Shape {
      int k, n, count;
    };
    std::mt19937_64 rng(kCorpusSeed);
    int serial = 0;
    for (auto [k, n, count] : {Shape{4, 8, 10}, Shape{5, 10, 8}, Shape{6, 12, 7}}) {
      for (int i = 0; i < count; ++i) {
        out.push_back({"random_res3#" + std::to_string(++serial) + " k=" + std::to_string(k) +
                           " n=" + std::to_string(n),
                       random_resolution_iii(rng, k, n)});
      }
    }
    serial = 0;
    for (auto [k, n, count] : {Shape{5, 10, 12}, Shape{6, 12, 13}}) {
      for (int i = 0; i < count; ++i) {
        out.push_back({"random_res4#" + std::to_string(++serial) + " k=" + std::to_string(k) +
                           " n=" + std::to_string(n),
                       random_resolution_iv(rng, k, n)});
      }
    }
    return out;
  }();
  return corpus;
}

}  // namespace fracfac
