#include "fracfac/report.hpp"

#include <sstream>

#include "fracfac/analyze.hpp"

namespace fracfac {

namespace {

std::string roman(int value) {
  static const std::pair<int, const char*> kDigits[] = {
      {50, "L"}, {40, "XL"}, {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"}};
  std::string out;
  for (auto [v, s] : kDigits) {
    while (value >= v) {
      out += s;
      value -= v;
    }
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  return os.str();
}

Json columns_json(const RegularDesign& d) {
  Json cols = Json::array();
  for (const auto& c : d.columns()) cols.push_back(c.to_string());
  return cols;
}

}  // namespace

std::string resolution_label(std::optional<int> resolution) {
  if (!resolution) return "full";
  return *resolution <= 89 ? roman(*resolution) : std::to_string(*resolution);
}

AnalysisDocument analyze_design(const RegularDesign& d) {
  AnalysisDocument doc;
  doc.runs = d.runs();
  doc.factors = d.factors();
  doc.k = d.k();
  doc.rank = d.rank();
  doc.p = d.p();
  doc.wlp = wordlength_pattern(d);
  doc.resolution = resolution(doc.wlp);
  doc.strength = doc.resolution ? *doc.resolution - 1 : d.factors();

  const RegularDesign full = d.rank() < d.k() ? reembed(d) : d;
  const auto profile = alias_profile(full);
  doc.f = profile.f();
  doc.g = profile.g();
  doc.m_main = profile.main_multiset();
  doc.m_nonmain = profile.nonmain_multiset();
  doc.is_even = is_even(d);
  if (!doc.resolution || *doc.resolution >= 4) {
    const auto report = is_maximal(full);
    doc.is_maximal = report.is_maximal;
    if (report.witness && d.rank() == d.k()) doc.maximality_witness = report.witness;
  }
  doc.fingerprint_hash = fingerprint(d).hash();

  const auto b = b3_b4_from_profile(profile, d.factors());
  if (b.b3 != doc.wlp.B(3) || b.b4 != doc.wlp.B(4)) {
    throw Error(ErrorKind::Inconsistent, "alias profile and wordlength pattern disagree on B3/B4");
  }
  return doc;
}

Json to_json(const WordlengthPattern& w) {
  Json out = Json::array();
  for (auto b : w.words) out.push_back(b);
  return out;
}

Json to_json(const AnalysisDocument& doc) {
  Json j;
  j["N"] = doc.runs;
  j["n"] = doc.factors;
  j["k"] = doc.k;
  j["rank"] = doc.rank;
  j["p"] = doc.p;
  j["resolution"] = doc.resolution ? Json(*doc.resolution) : Json("full");
  j["strength"] = doc.strength;
  j["wlp"] = to_json(doc.wlp);
  j["f"] = doc.f;
  j["g"] = doc.g;
  j["m_multiset_main"] = doc.m_main;
  j["m_multiset_nonmain"] = doc.m_nonmain;
  j["is_even"] = doc.is_even;
  j["is_maximal"] = doc.is_maximal ? Json(*doc.is_maximal) : Json(nullptr);
  j["maximality_witness"] =
      doc.maximality_witness ? Json(doc.maximality_witness->to_string()) : Json(nullptr);
  j["fingerprint_hash"] = doc.fingerprint_hash;
  return j;
}

std::string to_text(const AnalysisDocument& doc) {
  std::ostringstream os;
  os << "N            " << doc.runs << '\n'
     << "n            " << doc.factors << '\n'
     << "k            " << doc.k << (doc.rank < doc.k ? " (rank " + std::to_string(doc.rank) + ")" : "")
     << '\n'
     << "p            " << doc.p << '\n'
     << "resolution   " << resolution_label(doc.resolution) << '\n'
     << "strength     " << doc.strength << '\n'
     << "wlp          " << join(doc.wlp.words) << '\n'
     << "f / g        " << doc.f << " / " << doc.g << '\n'
     << "m (main)     " << join(doc.m_main) << '\n'
     << "m (non-main) " << join(doc.m_nonmain) << '\n'
     << "even         " << (doc.is_even ? "yes" : "no") << '\n'
     << "maximal      "
     << (doc.is_maximal ? (*doc.is_maximal ? "yes" : "no") : "n/a (resolution III)");
  if (doc.maximality_witness) os << " (can add " << doc.maximality_witness->to_string() << ")";
  os << '\n' << "fingerprint  " << doc.fingerprint_hash << '\n';
  return os.str();
}

Json to_json(const MaximalCensus& census) {
  Json j;
  j["k"] = census.k;
  j["N"] = std::uint64_t{1} << census.k;
  j["n_min"] = census.n_min;
  j["n_max"] = census.n_max;
  j["class_count"] = census.classes.size();
  Json classes = Json::array();
  for (const auto& form : census.classes) {
    const auto d = form.design();
    const auto w = wordlength_pattern(d);
    Json c;
    c["n"] = d.factors();
    c["resolution"] = resolution(w) ? Json(*resolution(w)) : Json("full");
    c["wlp"] = to_json(w);
    c["columns"] = columns_json(d);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  j["visited"] = census.visited;
  j["labelled"] = census.labelled;
  j["fingerprint_collisions"] = census.fingerprint_collisions;
  return j;
}

Json to_json(const SearchReport& report) {
  Json j;
  j["base_n"] = report.base_factors;
  j["n"] = report.n;
  j["k"] = report.k;
  j["best_wlp"] = to_json(report.best_wlp);
  j["visited"] = report.visited;
  j["optimal_subsets"] = report.optimal_subsets;
  j["ties"] = report.ties;
  j["deduplicated"] = report.deduplicated;
  Json winners = Json::array();
  for (const auto& w : report.winners) {
    Json entry;
    Json keep = Json::array();
    for (int i : w.keep) keep.push_back(i + 1);
    entry["keep"] = std::move(keep);
    entry["columns"] = columns_json(w.design);
    winners.push_back(std::move(entry));
  }
  j["winners"] = std::move(winners);
  return j;
}

Json to_json(const LawReport& report) {
  Json j;
  j["law"] = report.law;
  j["passed"] = report.passed();
  j["case_count"] = report.cases.size();
  j["failures"] = report.failures();
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["detail"] = c.detail;
    cases.push_back(std::move(entry));
  }
  j["cases"] = std::move(cases);
  return j;
}

}  // namespace fracfac
