#include "fracfac/laws.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fracfac/analyze.hpp"
#include "fracfac/construct.hpp"

namespace fracfac {

namespace {

std::string wlp_string(const WordlengthPattern& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= w.length(); ++i) os << (i > 1 ? "," : "") << w.B(i);
  os << ')';
  return os.str();
}

const char* order_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "<";
  if (o == std::strong_ordering::greater) return ">";
  return "=";
}

std::vector<CorpusEntry> subjects(const LawOptions& options) {
  if (options.design) return {{"design", *options.design}};
  return builtin_corpus();
}

bool resolution_at_least_iv(const RegularDesign& d) {
  const auto r = resolution(d);
  return !r || *r >= 4;
}

LawReport law_thm21(const LawOptions& options) {
  LawReport report{"thm2.1", {}};
  for (const auto& [name, d] : subjects(options)) {
    if (d.k() + 1 > 12) continue;
    const int strength = std::min(oa_strength(d), 3);
    if (strength < 2) continue;
    const auto dbl = doubled(d);
    bool ok = strength_oracle(dbl, strength);
    std::string detail = "strength " + std::to_string(strength) + " kept by the double";
    if (strength == 3 && d.factors() >= 2) {
      const bool four = strength_oracle(dbl, 4);
      ok = ok && !four;
      detail += four ? "; double unexpectedly has strength 4" : "; double lacks strength 4";
    }
    report.cases.push_back({name, ok, detail});
  }
  return report;
}

LawReport law_thm22(const LawOptions& options) {
  LawReport report{"thm2.2", {}};
  for (const auto& [name, d] : subjects(options)) {
    if (d.k() + 1 > 24) continue;
    const bool ok = verify_thm22(d);
    report.cases.push_back({name, ok, ok ? "alias-set counts of the double match" : "mismatch"});
  }
  return report;
}

LawReport law_thm23(const LawOptions& options) {
  LawReport report{"thm2.3", {}};
  for (const auto& [name, d] : subjects(options)) {
    if (2 * d.factors() > gf2::kMaxBinomial) continue;
    const auto w = wordlength_pattern(d);
    const auto wd = wordlength_pattern(doubled(d));
    const int n = d.factors();
    const bool transform = verify_thm23(d);
    const bool b3 = wd.B(3) == 4 * w.B(3);
    const bool b4 = wd.B(4) == 8 * w.B(4) + static_cast<std::uint64_t>(n) * (n - 1) / 2;
    report.cases.push_back({name, transform && b3 && b4,
                            "double " + wlp_string(wd) + (transform ? " matches" : " differs") +
                                (b3 && b4 ? "; B3*, B4* identities hold" : "; B3*/B4* identity fails")});
  }
  return report;
}

LawReport law_cor24(const LawOptions& options) {
  LawReport report{"cor2.4", {}};
  const auto& corpus = builtin_corpus();
  std::vector<std::pair<const CorpusEntry*, const CorpusEntry*>> pairs;
  std::vector<CorpusEntry> given;
  if (options.design) {
    given.push_back({"design", *options.design});
    for (const auto& e : corpus) {
      if (e.design.k() == options.design->k() && e.design.factors() == options.design->factors()) {
        pairs.emplace_back(&given.front(), &e);
      }
    }
  } else {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        if (corpus[i].design.k() == corpus[j].design.k() &&
            corpus[i].design.factors() == corpus[j].design.factors()) {
          pairs.emplace_back(&corpus[i], &corpus[j]);
        }
      }
    }
  }
  for (auto [a, b] : pairs) {
    const auto before = ma_compare(wordlength_pattern(a->design), wordlength_pattern(b->design));
    const auto after =
        ma_compare(wordlength_pattern(doubled(a->design)), wordlength_pattern(doubled(b->design)));
    report.cases.push_back({a->name + " vs " + b->name, before == after,
                            std::string("designs ") + order_name(before) + ", doubles " +
                                order_name(after)});
  }
  return report;
}

LawReport law_thm32(const LawOptions& options) {
  LawReport report{"thm3.2", {}};
  for (const auto& [name, d] : subjects(options)) {
    if (d.rank() < d.k() || !resolution_at_least_iv(d)) continue;
    const auto m = is_maximal(d);
    report.cases.push_back({name, m.criterion_agreement,
                            std::string(m.is_maximal ? "maximal" : "not maximal") +
                                (m.criterion_agreement ? "; criteria agree" : "; criteria disagree")});
  }
  return report;
}

LawReport law_thm33(const LawOptions& options) {
  LawReport report{"thm3.3", {}};
  for (const auto& [name, d] : subjects(options)) {
    if (d.rank() < d.k() || !resolution_at_least_iv(d) || d.k() + 1 > 24) continue;
    const bool before = is_maximal(d).is_maximal;
    const bool after = is_maximal(doubled(d)).is_maximal;
    report.cases.push_back({name, before == after,
                            std::string("design ") + (before ? "maximal" : "not maximal") +
                                ", double " + (after ? "maximal" : "not maximal")});
  }
  return report;
}

LawReport law_cor36(const LawOptions& options) {
  LawReport report{"cor3.6", {}};
  std::mt19937_64 rng(options.seed);
  for (int k = 4; k <= 6; ++k) {
    const auto sat = saturated_res4(k);
    int odd = 0;
    for (int s = 0; s < options.samples; ++s) {
      const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(sat.factors()));
      if (!is_even(wordlength_pattern(random_projection(rng, sat, n)))) ++odd;
    }
    report.cases.push_back({"projections of saturated_res4(" + std::to_string(k) + ")", odd == 0,
                            std::to_string(options.samples) + " sampled, " + std::to_string(odd) +
                                " with an odd-length word"});
  }
  for (const auto& [name, d] : builtin_corpus()) {
    const bool fast = is_even(d);
    const bool def = is_even(wordlength_pattern(d));
    report.cases.push_back({name + " evenness", fast == def,
                            std::string("row-space test ") + (fast ? "even" : "odd") + ", pattern " +
                                (def ? "even" : "odd")});
  }
  const auto census = enumerate_maximal(5, 11, 15);
  report.cases.push_back({"no maximal 32-run design with 10 < n < 16", census.classes.empty(),
                          std::to_string(census.classes.size()) + " classes found"});
  return report;
}

LawReport law_thm41_ineq(const LawOptions& options) {
  LawReport report{"thm4.1-ineq", {}};
  const auto witnesses = verify_thm41_inequality(2, options.t_max);
  for (int t = 2; t <= options.t_max; ++t) {
    std::size_t count = 0;
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& w : witnesses) {
      if (w.t != t) continue;
      ++count;
      if (!w.holds || !w.deleted_pairs_identity) {
        if (bad++ == 0) first_bad = "u=" + std::to_string(w.u);
      }
    }
    report.cases.push_back({"t=" + std::to_string(t), bad == 0,
                            std::to_string(count) + " values of u" +
                                (bad == 0 ? ", all hold" : ", first failure at " + first_bad)});
  }
  return report;
}

LawReport law_eq4_objective(const LawOptions& options) {
  LawReport report{"eq4-objective", {}};
  std::mt19937_64 rng(options.seed);
  for (int s = 0; s < options.samples; ++s) {
    const int t = 1 + static_cast<int>(rng() % 3);
    const auto spec = random_deletion_spec(rng, t);
    const auto objective = deletion_objective(spec);
    const auto direct = nonmain_sum_squares(apply_deletion(spec));
    report.cases.push_back({"sample " + std::to_string(s + 1) + " t=" + std::to_string(t) +
                                " u=" + std::to_string(spec.total()),
                            objective >= 0 && static_cast<std::uint64_t>(objective) == direct,
                            "objective " + std::to_string(objective) + ", alias profile " +
                                std::to_string(direct)});
  }
  return report;
}

}  // namespace

bool LawReport::passed() const { return failures() == 0; }

std::size_t LawReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const LawCase& c) { return !c.passed; }));
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {"thm2.1", "thm2.2", "thm2.3",
                                                 "cor2.4", "thm3.2", "thm3.3",
                                                 "cor3.6", "thm4.1-ineq", "eq4-objective"};
  return names;
}

LawReport run_law(std::string_view law, const LawOptions& options) {
  if (law == "thm2.1") return law_thm21(options);
  if (law == "thm2.2") return law_thm22(options);
  if (law == "thm2.3") return law_thm23(options);
  if (law == "cor2.4") return law_cor24(options);
  if (law == "thm3.2") return law_thm32(options);
  if (law == "thm3.3") return law_thm33(options);
  if (law == "cor3.6") return law_cor36(options);
  if (law == "thm4.1-ineq") return law_thm41_ineq(options);
  if (law == "eq4-objective") return law_eq4_objective(options);
  throw Error(ErrorKind::Domain, "unknown law '" + std::string(law) + "'");
}

std::uint64_t nonmain_sum_squares(const RegularDesign& d) {
  auto m = pair_tally(d);
  for (const auto& c : d.columns()) m[c.bits()] = 0;
  std::uint64_t total = 0;
  for (std::size_t v = 1; v < m.size(); ++v) total += m[v] * m[v];
  return total;
}

DeletionSpec random_deletion_spec(std::mt19937_64& rng, int t) {
  const std::uint32_t size = 1u << t;
  DeletionSpec spec;
  spec.t = t;
  do {
    for (auto& group : spec.deleted) {
      group.clear();
      std::vector<std::uint32_t> pool(size);
      std::iota(pool.begin(), pool.end(), 0u);
      const auto count = static_cast<std::uint32_t>(rng() % (size + 1));
      for (std::uint32_t i = 0; i < count; ++i) {
        std::swap(pool[i], pool[i + static_cast<std::uint32_t>(rng() % (size - i))]);
        group.emplace_back(t, pool[i]);
      }
    }
  } while (spec.total() >= 5 * static_cast<int>(size));
  return spec;
}

}  // namespace fracfac
