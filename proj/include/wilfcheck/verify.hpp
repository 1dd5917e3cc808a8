#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wilfcheck/bijection.hpp"
#include "wilfcheck/classes.hpp"
#include "wilfcheck/enumerate.hpp"
#include "wilfcheck/lrmax.hpp"
#include "wilfcheck/pattern.hpp"
#include "wilfcheck/permutation.hpp"

namespace wilfcheck {

namespace detail {

// order-preserving 64-bit key, 5 bits per entry; enough for the n <= 12 guard
inline std::uint64_t pack_key(const Permutation& perm) {
  std::uint64_t key = 0;
  for (const int v : perm.values()) key = (key << 5) | static_cast<unsigned>(v);
  return key;
}

template <typename Fn>
void for_each_perm(int n, Fn&& fn) {
  PermutationStream stream(n);
  while (auto perm = stream.next()) fn(*perm);
}

}  // namespace detail

/**
 * Replaceable checkers for the verification suite. Defaults are the real
 * implementations; tests substitute deliberately broken ones to prove the
 * suite catches and names failures.
 */
struct VerifyHooks {
  std::function<bool(const Permutation&)> satisfying_fast =
      [](const Permutation& p) { return is_satisfying_fast(p); };
  std::function<bool(const Permutation&)> avoids_31_4_2_fast =
      [](const Permutation& p) { return avoids_3142v_fast(p); };
  std::function<bool(const Permutation&)> avoids_321_scan =
      [](const Permutation& p) { return avoids_classical(p, ClassicalPattern::k321); };
  std::function<bool(const Permutation&)> avoids_312_scan =
      [](const Permutation& p) { return avoids_classical(p, ClassicalPattern::k312); };
  std::function<Permutation(const Permutation&)> wilf_map =
      [](const Permutation& p) { return wilf_bijection(p); };
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int n_max = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }
};

inline void print_report(const VerifyReport& report, std::ostream& os) {
  for (const auto& check : report.checks)
    os << (check.passed ? "PASS " : "FAIL ") << check.name << " (n<=" << report.n_max
       << "): " << check.detail << '\n';
}

/**
 * Runs every module invariant for each n <= n_max and reports one pass/fail
 * line per named check. Failures carry a counterexample; they are report
 * content, never exceptions.
 */
inline VerifyReport verify_suite(int n_max, const VerifyHooks& hooks = {}) {
  VerifyReport report;
  report.n_max = n_max;
  const auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const auto counterexample = [](int n, const Permutation& p) {
    return "counterexample n=" + std::to_string(n) + " perm=" + to_text(p);
  };
  static const VincularPattern k321 = parse_pattern("3-2-1");
  static const VincularPattern k312 = parse_pattern("3-1-2");

  {  // every valid spec round-trips through both fills
    std::uint64_t specs_checked = 0;
    std::optional<std::string> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
      for_each_valid_spec(n, [&](const LrmaxSpec& spec) {
        if (failure) return;
        ++specs_checked;
        if (!is_valid_spec(spec) || lrmax_spec(minimal_permutation(spec)) != spec ||
            lrmax_spec(maximal_permutation(spec)) != spec)
          failure = "counterexample spec " + to_text(spec);
      });
    }
    add("spec-round-trip", !failure,
        failure.value_or(std::to_string(specs_checked) + " specs round-tripped"));
  }

  {  // decomposition reassembles and gaps stay below their record
    std::optional<std::string> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        const Decomposition dec = decompose(p);
        if (reassemble(dec) != p) {
          failure = counterexample(n, p);
          return;
        }
        for (const auto& block : dec.blocks)
          for (const int v : block.gap)
            if (v >= block.maximum) failure = counterexample(n, p);
      });
    }
    add("decompose-round-trip", !failure, failure.value_or("reassembly exact"));
  }

  {  // gap sorting never disturbs the spec
    std::optional<std::string> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        const LrmaxSpec spec = lrmax_spec(p);
        if (lrmax_spec(sort_gaps(p, GapOrder::ascending)) != spec ||
            lrmax_spec(sort_gaps(p, GapOrder::descending)) != spec)
          failure = counterexample(n, p);
      });
    }
    add("sort-gaps-preserves-spec", !failure, failure.value_or("both directions"));
  }

  {  // 3-2-1-avoiding iff minimal for its spec
    std::optional<std::string> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        if (avoids(p, k321) != (p == minimal_permutation(lrmax_spec(p))))
          failure = counterexample(n, p);
      });
    }
    add("characterization-321-minimal", !failure, failure.value_or("equivalent"));
  }

  {  // 3-1-2-avoiding iff maximal for its spec
    std::optional<std::string> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        if (avoids(p, k312) != (p == maximal_permutation(lrmax_spec(p))))
          failure = counterexample(n, p);
      });
    }
    add("characterization-312-maximal", !failure, failure.value_or("equivalent"));
  }

  {  // specialized classical scans agree with the generic engine
    std::optional<std::string> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        if (hooks.avoids_321_scan(p) != avoids(p, k321) ||
            hooks.avoids_312_scan(p) != avoids(p, k312))
          failure = counterexample(n, p);
      });
    }
    add("classical-scans-vs-engine", !failure, failure.value_or("both patterns"));
  }

  {  // fast satisfying checker against the definitional oracle
    std::optional<std::string> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        if (hooks.satisfying_fast(p) != is_satisfying_naive(p))
          failure = counterexample(n, p);
      });
    }
    add("satisfying-fast-vs-naive", !failure, failure.value_or("no discrepancies"));
  }

  {  // fast 31-4-2 checker against the generic engine
    std::optional<std::string> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        if (hooks.avoids_31_4_2_fast(p) != avoids_31_4_2(p))
          failure = counterexample(n, p);
      });
    }
    add("avoiding-fast-vs-naive", !failure, failure.value_or("no discrepancies"));
  }

  {  // Simion-Schmidt: spec-preserving bijection, classes Catalan-sized
    std::optional<std::string> failure;
    std::string sizes;
    for (int n = 0; n <= n_max && !failure; ++n) {
      std::vector<std::uint64_t> image;
      std::vector<std::uint64_t> targets;
      std::uint64_t domain_size = 0;
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        if (avoids(p, k312)) targets.push_back(detail::pack_key(p));
        if (!avoids(p, k321)) return;
        ++domain_size;
        const Permutation q = simion_schmidt(p);
        if (lrmax_spec(q) != lrmax_spec(p) || !avoids(q, k312) ||
            simion_schmidt_inverse(q) != p) {
          failure = counterexample(n, p);
          return;
        }
        image.push_back(detail::pack_key(q));
      });
      if (failure) break;
      std::sort(image.begin(), image.end());
      std::sort(targets.begin(), targets.end());
      if (image != targets || domain_size != catalan(n)) {
        failure = "image/class mismatch at n=" + std::to_string(n);
        break;
      }
      if (n > 0) sizes += ',';
      sizes += std::to_string(domain_size);
    }
    add("simion-schmidt-bijection", !failure,
        failure.value_or("class sizes " + sizes));
  }

  {  // the main bijection is well defined, injective, onto, and invertible
    std::optional<std::string> failure;
    std::string fixed_counts;  // observed, not asserted
    for (int n = 0; n <= n_max && !failure; ++n) {
      std::uint64_t fixed_here = 0;
      std::vector<std::uint64_t> image;
      std::vector<std::uint64_t> targets;
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (failure) return;
        if (avoids_31_4_2(p)) {
          targets.push_back(detail::pack_key(p));
          try {
            if (wilf_bijection(wilf_bijection_inverse(p)) != p) {
              failure = counterexample(n, p) + " (inverse round-trip)";
              return;
            }
          } catch (const std::exception&) {
            failure = counterexample(n, p) + " (inverse round-trip threw)";
            return;
          }
        }
        if (!is_satisfying_naive(p)) return;
        Permutation q;
        try {
          q = hooks.wilf_map(p);
        } catch (const std::exception& e) {
          failure = counterexample(n, p) + " (map threw: " + e.what() + ")";
          return;
        }
        if (lrmax_spec(q) != lrmax_spec(p) || !avoids_31_4_2(q)) {
          failure = counterexample(n, p) + " maps to " + to_text(q);
          return;
        }
        if (wilf_bijection_inverse(q) != p) {
          failure = counterexample(n, p) + " (round-trip via " + to_text(q) + ")";
          return;
        }
        if (q == p) ++fixed_here;
        image.push_back(detail::pack_key(q));
      });
      if (failure) break;
      if (n > 0) fixed_counts += ',';
      fixed_counts += std::to_string(fixed_here);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
        failure = "duplicate image at n=" + std::to_string(n);
        break;
      }
      std::sort(targets.begin(), targets.end());
      if (image != targets)
        failure = "image differs from the avoiding class at n=" + std::to_string(n);
    }
    add("wilf-bijection", !failure,
        failure.value_or("spec-preserving bijection onto the avoiding class; "
                         "fixed points per n: " + fixed_counts));
  }

  {  // valid specs are Catalan-counted
    std::optional<std::string> failure;
    std::string counts;
    for (int n = 0; n <= n_max && !failure; ++n) {
      const std::uint64_t specs = count_valid_specs(n);
      if (specs != catalan(n))
        failure = "n=" + std::to_string(n) + " specs=" + std::to_string(specs) +
                  " catalan=" + std::to_string(catalan(n));
      if (n > 0) counts += ',';
      counts += std::to_string(specs);
    }
    add("valid-specs-catalan", !failure, failure.value_or("counts " + counts));
  }

  {  // the two classes are equinumerous
    std::optional<std::string> failure;
    std::string counts;
    for (int n = 0; n <= n_max && !failure; ++n) {
      std::uint64_t satisfying = 0;
      std::uint64_t avoiding = 0;
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (hooks.satisfying_fast(p)) ++satisfying;
        if (hooks.avoids_31_4_2_fast(p)) ++avoiding;
      });
      if (satisfying != avoiding) {
        failure = "n=" + std::to_string(n) + " satisfying=" + std::to_string(satisfying) +
                  " avoiding=" + std::to_string(avoiding);
        break;
      }
      if (n > 0) counts += ',';
      counts += std::to_string(satisfying);
    }
    add("class-counts-equal", !failure,
        failure.value_or("satisfying=avoiding: " + counts));
  }

  {  // prefix-partitioned counting merges to the single-stream answer
    std::optional<std::string> failure;
    for (int n = 1; n <= std::min(n_max, 8) && !failure; ++n) {
      ClassCounts merged;
      for (int first = 1; first <= n; ++first) {
        const ClassCounts part = count_partition(n, first, true);
        merged.satisfying += part.satisfying;
        merged.avoiding += part.avoiding;
      }
      ClassCounts single;
      detail::for_each_perm(n, [&](const Permutation& p) {
        if (is_satisfying_fast(p)) ++single.satisfying;
        if (avoids_3142v_fast(p)) ++single.avoiding;
      });
      if (merged != single) failure = "mismatch at n=" + std::to_string(n);
    }
    add("parallel-merge", !failure, failure.value_or("partitioned == single-stream"));
  }

  {  // identical reports modulo elapsed time
    std::optional<std::string> failure;
    const int n = std::min(n_max, 7);
    const CountReport a = count_classes(n);
    const CountReport b = count_classes(n);
    if (a.satisfying != b.satisfying || a.avoiding != b.avoiding ||
        a.specs != b.specs || a.catalan != b.catalan)
      failure = "repeated count_classes(" + std::to_string(n) + ") differ";
    add("count-determinism", !failure, failure.value_or("repeat run identical"));
  }

  return report;
}

}  // namespace wilfcheck
