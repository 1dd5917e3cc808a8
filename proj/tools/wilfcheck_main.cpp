// Command-line front end: pattern checks, spec extraction, fills, the two
// bijections, class counting, and the verification suite.
//
// Exit codes: 0 success / membership true, 1 semantic false or verification
// failure, 2 usage or parse error (including enumeration guard violations).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wilfcheck/wilfcheck.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

// WILFCHECK_MAX_N, when set, replaces the enumeration cap (clamped to the
// 64-bit hard guard). Soft ceilings below it still need --force.
int enumeration_cap() {
  if (const char* env = std::getenv("WILFCHECK_MAX_N")) {
    try {
      const int value = std::stoi(env);
      return std::clamp(value, 0, wilfcheck::kHardCountGuard);
    } catch (const std::exception&) {
      throw std::invalid_argument("WILFCHECK_MAX_N is not a number: " +
                                  std::string(env));
    }
  }
  return wilfcheck::kDefaultStreamGuard;
}

void enforce_guard(int n, int soft_ceiling, bool force, const std::string& what,
                   int hard_cap = -1) {
  const int cap = hard_cap > 0 ? std::min(hard_cap, enumeration_cap())
                               : enumeration_cap();
  if (n > cap)
    throw std::invalid_argument(what + " " + std::to_string(n) +
                                " exceeds the enumeration cap " +
                                std::to_string(cap));
  if (n > soft_ceiling && !force)
    throw std::invalid_argument(
        what + " " + std::to_string(n) + " exceeds the default ceiling " +
        std::to_string(soft_ceiling) + "; pass --force to run anyway");
  if (n > soft_ceiling)
    std::cerr << "warning: " << what << " " << n
              << " is above the default ceiling; this may take long\n";
}

int run_check(const std::string& class_name, const std::string& perm_text) {
  using namespace wilfcheck;
  const Permutation perm = parse_permutation(perm_text);
  std::optional<Occurrence> witness;
  if (class_name == "satisfying") {
    witness = first_unextendable_3241(perm);
  } else if (class_name == "avoiding3142v") {
    witness = first_occurrence(perm, pattern_31_4_2());
  } else if (class_name == "avoids321") {
    witness = first_occurrence(perm, parse_pattern("3-2-1"));
  } else if (class_name == "avoids312") {
    witness = first_occurrence(perm, parse_pattern("3-1-2"));
  } else {
    throw std::invalid_argument("unknown class '" + class_name + "'");
  }
  if (!witness) {
    std::cout << "true\n";
    return kExitTrue;
  }
  std::cout << "false\n" << "witness: " << to_text(*witness) << '\n';
  return kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation pattern toolkit: vincular containment, LRmax specs, "
               "and the satisfying/31-4-2 Wilf equivalence"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "test class membership of one permutation");
  std::string check_class;
  std::string check_perm;
  check->add_option("--class", check_class, "satisfying|avoiding3142v|avoids321|avoids312")
      ->required();
  check->add_option("perm", check_perm, "permutation, comma-separated")->required();

  // occurrences
  auto* occ = app.add_subcommand("occurrences", "list pattern occurrences");
  std::string occ_pattern;
  std::string occ_perm;
  std::size_t occ_limit = wilfcheck::kNoLimit;
  occ->add_option("pattern", occ_pattern, "vincular pattern, e.g. 31-4-2")->required();
  occ->add_option("perm", occ_perm, "host permutation")->required();
  occ->add_option("--limit", occ_limit, "stop after this many occurrences");

  // spec
  auto* spec_cmd = app.add_subcommand("spec", "print the LRmax specification");
  std::string spec_perm;
  spec_cmd->add_option("perm", spec_perm, "permutation")->required();

  // fill
  auto* fill = app.add_subcommand("fill", "fill a spec minimally or maximally");
  std::string fill_kind;
  std::string fill_spec;
  fill->add_option("--kind", fill_kind, "minimal|maximal")->required();
  fill->add_option("spec", fill_spec, "spec, e.g. \"P=1,3,6;M=3,5,7;n=7\"")->required();

  // map
  auto* map_cmd = app.add_subcommand("map", "apply a bijection");
  std::string map_bijection;
  std::string map_perm;
  bool map_inverse = false;
  map_cmd->add_option("--bijection", map_bijection, "simion-schmidt|wilf")->required();
  map_cmd->add_flag("--inverse", map_inverse, "apply the inverse direction");
  map_cmd->add_option("perm", map_perm, "permutation")->required();

  // count
  auto* count = app.add_subcommand("count", "count both classes for n = 0..N");
  int count_n_max = 0;
  bool count_naive = false;
  int count_jobs = 0;
  bool count_force = false;
  std::string count_format = "csv";
  std::string count_out;
  count->add_option("--n-max", count_n_max, "largest n to count")->required();
  count->add_flag("--naive", count_naive, "use the definitional oracles");
  count->add_option("--jobs", count_jobs, "worker threads (default: all cores, 1 = serial)");
  count->add_flag("--force", count_force, "allow n above the default ceiling");
  count->add_option("--format", count_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--out", count_out, "write to a file instead of stdout");

  // specs
  auto* specs_cmd = app.add_subcommand("specs", "count valid LRmax specs for one n");
  int specs_n = 0;
  bool specs_force = false;
  specs_cmd->add_option("--n", specs_n, "ambient size")->required();
  specs_cmd->add_flag("--force", specs_force, "allow n above the default ceiling");

  // verify
  auto* verify = app.add_subcommand("verify", "run the full invariant suite");
  int verify_n_max = 0;
  bool verify_force = false;
  verify->add_option("--n-max", verify_n_max, "largest n to verify")->required();
  verify->add_flag("--force", verify_force, "allow n above the default ceiling");

  try {
    app.parse(argc, argv);

    using namespace wilfcheck;
    if (*check) return run_check(check_class, check_perm);

    if (*occ) {
      const Permutation host = parse_permutation(occ_perm);
      const VincularPattern pattern = parse_pattern(occ_pattern);
      for (const Occurrence& o : occurrences(host, pattern, occ_limit))
        std::cout << to_text(o) << '\n';
      return kExitTrue;
    }

    if (*spec_cmd) {
      std::cout << to_text(lrmax_spec(parse_permutation(spec_perm))) << '\n';
      return kExitTrue;
    }

    if (*fill) {
      const LrmaxSpec spec = parse_spec(fill_spec);
      if (fill_kind == "minimal")
        std::cout << to_text(minimal_permutation(spec)) << '\n';
      else if (fill_kind == "maximal")
        std::cout << to_text(maximal_permutation(spec)) << '\n';
      else
        throw std::invalid_argument("unknown fill kind '" + fill_kind + "'");
      return kExitTrue;
    }

    if (*map_cmd) {
      const Permutation perm = parse_permutation(map_perm);
      Permutation image;
      if (map_bijection == "simion-schmidt")
        image = map_inverse ? simion_schmidt_inverse(perm) : simion_schmidt(perm);
      else if (map_bijection == "wilf")
        image = map_inverse ? wilf_bijection_inverse(perm) : wilf_bijection(perm);
      else
        throw std::invalid_argument("unknown bijection '" + map_bijection + "'");
      std::cout << to_text(image) << '\n';
      return kExitTrue;
    }

    if (*count) {
      if (count_n_max < 0) throw std::invalid_argument("--n-max must be non-negative");
      enforce_guard(count_n_max, kDefaultClassCountCeiling, count_force, "count size");
      CountOptions options;
      options.use_fast = !count_naive;
      options.jobs = count_jobs;
      options.guard = enumeration_cap();
      std::vector<CountReport> rows;
      rows.reserve(count_n_max + 1);
      for (int n = 0; n <= count_n_max; ++n)
        rows.push_back(count_classes(n, options));
      std::ofstream file;
      if (!count_out.empty()) {
        file.open(count_out);
        if (!file) throw std::invalid_argument("cannot open output file " + count_out);
      }
      std::ostream& os = count_out.empty() ? std::cout : file;
      if (count_format == "json")
        write_json(rows, os);
      else
        write_csv(rows, os);
      return kExitTrue;
    }

    if (*specs_cmd) {
      if (specs_n < 0) throw std::invalid_argument("--n must be non-negative");
      enforce_guard(specs_n, kDefaultSpecCountCeiling, specs_force, "spec count size");
      std::cout << "specs=" << count_valid_specs(specs_n) << '\n'
                << "catalan=" << catalan(specs_n) << '\n';
      return kExitTrue;
    }

    if (*verify) {
      if (verify_n_max < 0) throw std::invalid_argument("--n-max must be non-negative");
      enforce_guard(verify_n_max, kDefaultClassCountCeiling, verify_force,
                    "verification size", kDefaultStreamGuard);
      const VerifyReport report = verify_suite(verify_n_max);
      print_report(report, std::cout);
      return report.all_passed() ? kExitTrue : kExitFalse;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFalse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
