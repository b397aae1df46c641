// fracfac: construct, analyze, search and verify regular two-level designs.
//
// Exit codes: 0 ok, 2 usage/parse, 3 invariant, 4 capacity, 5 budget.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracfac/analyze.hpp"
#include "fracfac/construct.hpp"
#include "fracfac/design_io.hpp"
#include "fracfac/laws.hpp"
#include "fracfac/report.hpp"
#include "fracfac/search.hpp"

namespace {

using namespace fracfac;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Domain:
    case ErrorKind::InvalidGenerator:
    case ErrorKind::DimensionMismatch:
      return 2;
    case ErrorKind::ResolutionBelowII:
    case ErrorKind::ResolutionBelowIII:
    case ErrorKind::Inconsistent:
    case ErrorKind::Precondition:
    case ErrorKind::ReducedRank:
      return 3;
    case ErrorKind::SizeLimit:
    case ErrorKind::Capacity:
    case ErrorKind::Scale:
      return 4;
    case ErrorKind::Budget:
      return 5;
  }
  return 2;
}

std::uint64_t visit_budget() {
  const char* env = std::getenv("FRACFAC_BUDGET");
  if (!env || !*env) return kDefaultVisitBudget;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used == std::string(env).size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Domain, std::string("FRACFAC_BUDGET is not an unsigned integer: ") + env);
}

std::string summary(const RegularDesign& d) {
  return "N=" + std::to_string(d.runs()) + " n=" + std::to_string(d.factors()) +
         " resolution=" + resolution_label(resolution(d));
}

void emit(const RegularDesign& d, const std::string& out) {
  if (out.empty()) {
    std::cout << serialize_design(d);
    std::cerr << summary(d) << '\n';
  } else {
    write_design_file(d, out);
    std::cout << summary(d) << " -> " << out << '\n';
  }
}

std::vector<int> zero_based(const std::vector<int>& one_based) {
  std::vector<int> out;
  out.reserve(one_based.size());
  for (int i : one_based) out.push_back(i - 1);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular two-level fractional factorial designs"};
  app.require_subcommand(1);

  std::string file;
  std::string out;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "Report invariants of a design file");
  analyze->add_option("file", file, "Design file")->required();
  analyze->add_flag("--json", json, "JSON output");

  int times = 1;
  auto* dbl = app.add_subcommand("double", "Double a design");
  dbl->add_option("file", file, "Design file")->required();
  dbl->add_option("--times", times, "Number of doublings")->check(CLI::NonNegativeNumber);
  dbl->add_option("-o,--out", out, "Output file (stdout when omitted)");

  std::vector<int> keep;
  std::vector<int> drop;
  auto* proj = app.add_subcommand("project", "Project onto a subset of factors");
  proj->add_option("file", file, "Design file")->required();
  auto* keep_opt = proj->add_option("--keep", keep, "1-based factors to keep")->delimiter(',');
  auto* drop_opt = proj->add_option("--drop", drop, "1-based factors to drop")->delimiter(',');
  keep_opt->excludes(drop_opt);
  proj->add_option("-o,--out", out, "Output file (stdout when omitted)");

  bool add_factor = false;
  auto* fold = app.add_subcommand("foldover", "Fold over a design");
  fold->add_option("file", file, "Design file")->required();
  fold->add_flag("--add-factor", add_factor, "Append the block indicator factor");
  fold->add_option("-o,--out", out, "Output file (stdout when omitted)");

  std::string family_name;
  std::optional<int> family_k;
  std::optional<int> family_t;
  auto* family = app.add_subcommand("family", "Build a named design");
  family->add_option("--name", family_name, "5N16, 9N32, sat3, sat4 or full")
      ->required()
      ->check(CLI::IsMember({"5N16", "9N32", "sat3", "sat4", "full"}));
  family->add_option("--k", family_k, "Run-space dimension (sat3, sat4, full)");
  family->add_option("--t", family_t, "Doubling count (5N16, 9N32)");
  family->add_option("-o,--out", out, "Output file (stdout when omitted)");

  auto* search = app.add_subcommand("search", "Exhaustive searches (JSON output)");
  search->require_subcommand(1);
  int census_k = 0;
  int n_min = 0;
  int n_max = 0;
  auto* maximal = search->add_subcommand("maximal", "Isomorphism classes of maximal designs");
  maximal->add_option("--k", census_k, "Run-space dimension")->required();
  maximal->add_option("--n-min", n_min, "Smallest factor count")->required();
  maximal->add_option("--n-max", n_max, "Largest factor count")->required();
  std::string base_file;
  int proj_n = 0;
  bool dedupe = false;
  auto* ma = search->add_subcommand("ma-projection", "Minimum aberration projections");
  ma->add_option("--base", base_file, "Base design file")->required();
  ma->add_option("--n", proj_n, "Factors to keep")->required();
  ma->add_flag("--dedupe", dedupe, "One winner per isomorphism class");

  std::string law;
  std::string design_file;
  LawOptions law_options;
  auto* verify = app.add_subcommand("verify", "Check an identity over the corpus");
  verify->add_option("--law", law, "Law name")->required();
  verify->add_option("--design", design_file, "Use this design instead of the corpus");
  verify->add_option("--t-max", law_options.t_max, "Largest t for thm4.1-ineq");
  verify->add_option("--samples", law_options.samples, "Random samples");
  verify->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      const auto doc = analyze_design(read_design_file(file));
      if (json) {
        std::cout << to_json(doc).dump(2) << '\n';
      } else {
        std::cout << to_text(doc);
      }
    } else if (*dbl) {
      emit(doubled_n(read_design_file(file), times), out);
    } else if (*proj) {
      if (keep.empty() && drop.empty()) throw Error(ErrorKind::Domain, "project needs --keep or --drop");
      const auto d = read_design_file(file);
      emit(keep.empty() ? project_drop(d, zero_based(drop)) : project(d, zero_based(keep)), out);
    } else if (*fold) {
      emit(foldover(read_design_file(file), add_factor), out);
    } else if (*family) {
      const bool doubling = family_name == "5N16" || family_name == "9N32";
      if (doubling ? family_k.has_value() : family_t.has_value()) {
        throw Error(ErrorKind::Domain, family_name + (doubling ? " takes --t" : " takes --k"));
      }
      if (!doubling && !family_k) throw Error(ErrorKind::Domain, family_name + " needs --k");
      RegularDesign d = [&] {
        if (family_name == "5N16") return family_5N16(family_t.value_or(0));
        if (family_name == "9N32") return family_9N32(family_t.value_or(0));
        if (family_name == "sat3") return saturated_res3(*family_k);
        if (family_name == "sat4") return saturated_res4(*family_k);
        return full_factorial(*family_k);
      }();
      emit(d, out);
    } else if (*maximal) {
      std::cout << to_json(enumerate_maximal(census_k, n_min, n_max)).dump(2) << '\n';
    } else if (*ma) {
      const auto report = ma_projection_search(read_design_file(base_file), proj_n, dedupe,
                                               visit_budget());
      std::cout << to_json(report).dump(2) << '\n';
    } else if (*verify) {
      if (!design_file.empty()) law_options.design = read_design_file(design_file);
      const auto report = run_law(law, law_options);
      if (json) {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        for (const auto& c : report.cases) {
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        }
        std::cout << report.law << ": " << report.cases.size() - report.failures() << '/'
                  << report.cases.size() << " passed\n";
      }
      return report.passed() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "fracfac: " << file << ": " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "fracfac: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "fracfac: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
