#pragma once

// Machine-readable documents printed by the command-line tool. Field order in
// the JSON output is fixed (see README.md for the schema).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracfac/design.hpp"
#include "fracfac/laws.hpp"
#include "fracfac/search.hpp"

namespace fracfac {

using Json = nlohmann::ordered_json;

struct AnalysisDocument {
  std::uint64_t runs = 0;
  int factors = 0;
  int k = 0;
  int rank = 0;
  int p = 0;
  /// nullopt: no defining words ("full").
  std::optional<int> resolution;
  int strength = 0;
  WordlengthPattern wlp;
  /// Alias quantities refer to the reembedded design when rank < k.
  int f = 0;
  int g = 0;
  std::vector<std::uint64_t> m_main;
  std::vector<std::uint64_t> m_nonmain;
  bool is_even = false;
  /// nullopt when the design has resolution III (maximality undefined).
  std::optional<bool> is_maximal;
  std::optional<BitVec> maximality_witness;
  std::string fingerprint_hash;
};

/// Builds the document and re-checks B3/B4 against the alias profile;
/// throws Inconsistent on disagreement.
AnalysisDocument analyze_design(const RegularDesign& d);

Json to_json(const AnalysisDocument& doc);
std::string to_text(const AnalysisDocument& doc);

Json to_json(const WordlengthPattern& w);
Json to_json(const MaximalCensus& census);
Json to_json(const SearchReport& report);
Json to_json(const LawReport& report);

/// "full" for nullopt, otherwise the roman numeral (III, IV, V, ...).
std::string resolution_label(std::optional<int> resolution);

}  // namespace fracfac
