#include "fracfac/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "fracfac/construct.hpp"

namespace fracfac {

std::strong_ordering ma_compare(const WordlengthPattern& w1, const WordlengthPattern& w2) {
  const int len = std::max(w1.length(), w2.length());
  for (int i = 1; i <= len; ++i) {
    if (auto c = w1.B(i) <=> w2.B(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

MaximalCensus enumerate_maximal(int k, int n_min, int n_max) {
  if (k > kMaxCanonicalWidth) {
    throw Error(ErrorKind::Scale, "exhaustive census limited to k <= 5");
  }
  if (k < 1) throw Error(ErrorKind::Domain, "k must be positive");
  const int cap = 1 << (k - 1);
  if (n_min > n_max || n_min < k || n_max > cap) {
    throw Error(ErrorKind::Domain, "factor range must satisfy k <= n_min <= n_max <= 2^(k-1)");
  }

  const std::uint32_t points = 1u << k;
  const std::uint64_t full = (points == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << points) - 1));

  MaximalCensus census;
  census.k = k;
  census.n_min = n_min;
  census.n_max = n_max;

  struct Rep {
    RegularDesign design;
    DesignFingerprint fp;
  };
  std::vector<Rep> reps;

  // Every full-rank design is isomorphic to one containing e_1..e_k, and a
  // maximal design has full rank, so the basis is fixed and the remaining
  // columns are added in increasing order.
  std::vector<std::uint32_t> set;
  std::uint64_t basis_mask = 0;
  std::uint64_t cover = 1;  // zero is never available
  for (int i = 1; i <= k; ++i) {
    const std::uint32_t e = BitVec::unit(k, i).bits();
    for (auto s : set) cover |= std::uint64_t{1} << (s ^ e);
    cover |= std::uint64_t{1} << e;
    basis_mask |= std::uint64_t{1} << e;
    set.push_back(e);
  }

  auto record = [&] {
    ++census.labelled;
    std::vector<BitVec> cols;
    for (auto v : set) cols.emplace_back(k, v);
    auto d = RegularDesign::from_columns(k, std::move(cols));
    auto fp = fingerprint(d);
    for (const auto& rep : reps) {
      if (rep.fp == fp && find_isomorphism(d, rep.design, ~std::uint64_t{0})) return;
    }
    reps.push_back({std::move(d), std::move(fp)});
  };

  auto recurse = [&](auto&& self, std::uint32_t last, std::uint64_t cov) -> void {
    ++census.visited;
    const int size = static_cast<int>(set.size());
    if ((cov | 1) == full) {
      if (size >= n_min) record();
      return;
    }
    if (size >= n_max) return;
    for (std::uint32_t v = last + 1; v < points; ++v) {
      if ((basis_mask >> v) & 1u) continue;
      if ((cov >> v) & 1u) continue;
      std::uint64_t next = cov | (std::uint64_t{1} << v);
      for (auto s : set) next |= std::uint64_t{1} << (s ^ v);
      set.push_back(v);
      self(self, v, next);
      set.pop_back();
    }
  };
  recurse(recurse, 0, cover);

  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (reps[i].fp == reps[j].fp) ++census.fingerprint_collisions;
    }
    census.classes.push_back(canonical_form(reps[i].design));
  }
  std::sort(census.classes.begin(), census.classes.end(),
            [](const CanonicalForm& a, const CanonicalForm& b) {
              if (a.columns.size() != b.columns.size()) return a.columns.size() < b.columns.size();
              return a < b;
            });
  return census;
}

// ---------------------------------------------------------------------------

namespace {

// C(n, r) saturating at `limit + 1`.
std::uint64_t bounded_binomial(int n, int r, std::uint64_t limit) {
  r = std::min(r, n - r);
  unsigned __int128 c = 1;
  for (int i = 1; i <= r; ++i) {
    c = c * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (c > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

SearchReport ma_projection_search(const RegularDesign& base, int n, bool dedupe,
                                  std::uint64_t budget) {
  const int base_n = base.factors();
  if (n < 1 || n > base_n) {
    throw Error(ErrorKind::Domain, "projection size must lie in [1, " + std::to_string(base_n) + "]");
  }
  const auto subsets = bounded_binomial(base_n, n, budget);
  if (subsets > budget) {
    throw Error(ErrorKind::Budget, "C(" + std::to_string(base_n) + ", " + std::to_string(n) +
                                       ") subsets exceed the visit budget of " +
                                       std::to_string(budget) +
                                       " (0 visited); reduce the base by its group symmetry first");
  }

  SearchReport report;
  report.base_factors = base_n;
  report.n = n;
  report.k = base.k();

  std::vector<std::vector<int>> best_keeps;
  bool have_best = false;
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ++report.visited;
    auto proj = project(base, idx);
    auto w = wordlength_pattern_fast(proj);
    const auto cmp = have_best ? ma_compare(w, report.best_wlp) : std::strong_ordering::less;
    if (cmp == std::strong_ordering::less) {
      report.best_wlp = std::move(w);
      best_keeps.clear();
      have_best = true;
    }
    if (cmp != std::strong_ordering::greater) best_keeps.push_back(idx);

    int i = n - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == base_n - n + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  report.optimal_subsets = best_keeps.size();
  report.ties = best_keeps.size() > 1;

  if (!dedupe) {
    for (auto& keep : best_keeps) {
      auto d = project(base, keep);
      report.winners.push_back({std::move(keep), std::move(d)});
    }
    return report;
  }

  report.deduplicated = true;
  struct Rep {
    RegularDesign design;
    DesignFingerprint fp;
  };
  std::vector<Rep> reps;
  for (auto& keep : best_keeps) {
    auto d = project(base, keep);
    auto full = d.rank() < d.k() ? reembed(d) : d;
    auto fp = fingerprint(full);
    const bool exact = full.k() <= kMaxCanonicalWidth;
    bool fresh = true;
    for (const auto& rep : reps) {
      if (rep.fp == fp && rep.design.k() == full.k() &&
          (!exact || find_isomorphism(full, rep.design, ~std::uint64_t{0}))) {
        fresh = false;
        break;
      }
    }
    if (!fresh) continue;
    reps.push_back({std::move(full), std::move(fp)});
    report.winners.push_back({std::move(keep), std::move(d)});
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

// Columns a..e of the 2^{5-1} in the order built by design_2_5_1().
constexpr std::array<std::uint32_t, 5> kGroupColumns = {0b1000, 0b0100, 0b0010, 0b0001, 0b1111};

}  // namespace

int DeletionSpec::total() const {
  int u = 0;
  for (const auto& g : deleted) u += static_cast<int>(g.size());
  return u;
}

void validate(const DeletionSpec& spec) {
  if (spec.t < 1 || spec.t > 20) throw Error(ErrorKind::Domain, "deletion spec needs 1 <= t <= 20");
  for (const auto& group : spec.deleted) {
    std::set<std::uint32_t> seen;
    if (group.size() > (std::size_t{1} << spec.t)) {
      throw Error(ErrorKind::Domain, "more deletions than factors in a group");
    }
    for (const auto& j : group) {
      if (j.width() != spec.t) throw Error(ErrorKind::Domain, "index vector width differs from t");
      if (!seen.insert(j.bits()).second) throw Error(ErrorKind::Domain, "factor deleted twice");
    }
  }
}

int xstar_column_index(int t, int group, const BitVec& j) {
  if (group < 0 || group >= 5 || j.width() != t) {
    throw Error(ErrorKind::Domain, "invalid factor of X*");
  }
  // doubling i appends coordinate 4 + i and places its "-" copies after the
  // "+" copies, so it contributes 5 * 2^(i-1) to the index.
  int index = group;
  for (int i = 1; i <= t; ++i) {
    if (j.coord(i)) index += 5 << (i - 1);
  }
  return index;
}

RegularDesign apply_deletion(const DeletionSpec& spec) {
  validate(spec);
  std::vector<int> drop;
  for (int g = 0; g < 5; ++g) {
    for (const auto& j : spec.deleted[static_cast<std::size_t>(g)]) {
      drop.push_back(xstar_column_index(spec.t, g, j));
    }
  }
  return project_drop(family_5N16(spec.t), std::move(drop));
}

std::int64_t deletion_objective(const DeletionSpec& spec) {
  validate(spec);
  const int t = spec.t;
  const std::int64_t size = std::int64_t{1} << t;
  const std::int64_t u = spec.total();
  std::int64_t objective = 0;

  std::vector<std::int64_t> tally(static_cast<std::size_t>(size));
  for (int x = 0; x < 5; ++x) {
    for (int y = x + 1; y < 5; ++y) {
      const auto& dx = spec.deleted[static_cast<std::size_t>(x)];
      const auto& dy = spec.deleted[static_cast<std::size_t>(y)];
      std::fill(tally.begin(), tally.end(), 0);
      for (const auto& i : dx) {
        for (const auto& j : dy) ++tally[(i ^ j).bits()];
      }
      const auto nx = static_cast<std::int64_t>(dx.size());
      const auto ny = static_cast<std::int64_t>(dy.size());
      for (std::int64_t kv = 0; kv < size; ++kv) {
        const auto m = size - nx - ny + tally[static_cast<std::size_t>(kv)];
        objective += m * m;
      }
    }
  }

  std::fill(tally.begin(), tally.end(), 0);
  for (const auto& group : spec.deleted) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) ++tally[(group[a] ^ group[b]).bits()];
    }
  }
  for (std::int64_t kv = 1; kv < size; ++kv) {
    const auto m = 5 * (size / 2) - u + tally[static_cast<std::size_t>(kv)];
    objective += m * m;
  }
  return objective;
}

GroupedAliasIndex grouped_alias_index(int t) {
  if (t < 1 || t > 20) throw Error(ErrorKind::Domain, "X* index needs 1 <= t <= 20");
  GroupedAliasIndex index;
  index.t = t;
  const int width = 4 + t;
  const std::uint32_t size = 1u << t;
  for (int x = 0; x < 5; ++x) {
    for (int y = x + 1; y < 5; ++y) {
      const std::uint32_t head = (kGroupColumns[static_cast<std::size_t>(x)] ^
                                  kGroupColumns[static_cast<std::size_t>(y)]) << t;
      for (std::uint32_t kv = 0; kv < size; ++kv) {
        index.between.emplace(std::make_pair(std::make_pair(x, y), kv), BitVec(width, head | kv));
      }
    }
  }
  for (std::uint32_t kv = 1; kv < size; ++kv) index.within.emplace(kv, BitVec(width, kv));
  return index;
}

std::vector<InequalityWitness> verify_thm41_inequality(int t_min, int t_max) {
  if (t_min < 2 || t_max > 13 || t_min > t_max) {
    throw Error(ErrorKind::Domain, "inequality check needs 2 <= t_min <= t_max <= 13");
  }
  std::vector<InequalityWitness> out;
  for (int t = t_min; t <= t_max; ++t) {
    const std::int64_t full = std::int64_t{1} << t;
    const std::int64_t half = full / 2;
    for (std::int64_t u = 0; u <= half; ++u) {
      InequalityWitness w;
      w.t = t;
      w.u = u;
      const std::int64_t tri = u * (u + 1) / 2;
      w.a = tri / half;
      w.b = tri % half;
      const std::int64_t a = w.a;
      const std::int64_t b = w.b;
      w.rhs_upper = 4 * full * (full - u) * (full - u) + 6 * full * full * full +
                    (4 * half + b) * (4 * half + b) + (full - 2 * u + a - 1) * (5 * half) * (5 * half) +
                    (2 * u - a - 1) * (4 * half) * (4 * half);

      const std::int64_t remaining = 5 * full - u;
      const __int128 pairs = static_cast<__int128>(remaining) * (remaining - 1) / 2;
      const __int128 num = pairs * pairs;
      const std::int64_t den = 8 * full - 1;
      const auto g = std::gcd(static_cast<std::int64_t>(num % den), den);
      w.rhs_lower_num = static_cast<std::int64_t>(num / g);
      w.rhs_lower_den = den / g;
      w.holds = static_cast<__int128>(w.rhs_upper) * den < num;

      w.deleted_pairs_identity = u * (u - 1) / 2 + u * (full - u) == (2 * u - a) * half - b;
      out.push_back(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> twice_each(const std::vector<std::uint64_t>& ms) {
  std::vector<std::uint64_t> out;
  for (auto m : ms) {
    out.push_back(2 * m);
    out.push_back(2 * m);
  }
  return out;
}

}  // namespace

bool verify_thm22(const RegularDesign& d) {
  const RegularDesign x = d.rank() < d.k() ? reembed(d) : d;
  const auto before = alias_profile(x);
  const auto after = alias_profile(doubled(x));

  auto nonmain = twice_each(before.nonmain_multiset());
  nonmain.push_back(static_cast<std::uint64_t>(x.factors()));
  std::sort(nonmain.begin(), nonmain.end());
  auto main = twice_each(before.main_multiset());
  std::sort(main.begin(), main.end());

  return after.f() == 2 * before.f() + 1 && after.g() == 2 * before.g() + 1 &&
         after.nonmain_multiset() == nonmain && after.main_multiset() == main;
}

bool verify_thm23(const RegularDesign& d) {
  const auto dbl = doubled(d);
  const auto computed = dbl.p() <= 24 ? wordlength_pattern_direct(dbl) : wordlength_pattern_fast(dbl);
  return doubled_wordlength_pattern(wordlength_pattern(d), d.factors()) == computed;
}

}  // namespace fracfac
