#pragma once

#include <optional>
#include <span>

#include "wilfcheck/lrmax.hpp"
#include "wilfcheck/pattern.hpp"
#include "wilfcheck/permutation.hpp"

namespace wilfcheck {

inline const VincularPattern& pattern_3241() {
  static const VincularPattern p = parse_pattern("3-2-4-1");
  return p;
}

inline const VincularPattern& pattern_31_4_2() {
  static const VincularPattern p = parse_pattern("31-4-2");
  return p;
}

/**
 * First 3-2-4-1 occurrence (in lexicographic index order) that does not
 * extend to a 3-5-2-4-1 occurrence, i.e. that has no entry larger than its
 * '4' strictly between its '3' and its '2'. Empty when every occurrence
 * extends, which is the membership condition for the satisfying class.
 */
inline std::optional<Occurrence> first_unextendable_3241(const Permutation& host) {
  const std::vector<int>& h = host.values();
  std::optional<Occurrence> found;
  for_each_occurrence(host, pattern_3241(), [&](std::span<const int> idx) {
    const int four_value = h[idx[2]];
    for (int m = idx[0] + 1; m < idx[1]; ++m)
      if (h[m] > four_value) return false;  // witnessed; keep scanning
    found = Occurrence{{idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1}};
    return true;
  });
  return found;
}

/// Definitional check: every 3-2-4-1 occurrence carries a witness making it
/// part of a 3-5-2-4-1 occurrence. This is the ground-truth oracle the fast
/// checker is held to.
inline bool is_satisfying_naive(const Permutation& host) {
  return !first_unextendable_3241(host).has_value();
}

inline bool avoids_31_4_2(const Permutation& host) {
  return avoids(host, pattern_31_4_2());
}

/**
 * Recursive evaluation of the satisfying condition: every gap must reduce to
 * a satisfying permutation, and sorting each gap ascending must yield the
 * minimal permutation of the host's spec. Agrees with is_satisfying_naive on
 * every input.
 */
inline bool is_satisfying_fast(const Permutation& host) {
  if (host.empty()) return true;
  const LrmaxSpec spec = lrmax_spec(host);
  if (sort_gaps(host, GapOrder::ascending) != minimal_permutation(spec))
    return false;
  for (const auto& block : decompose(host).blocks) {
    // a gap shorter than the pattern cannot contain 3-2-4-1
    if (block.gap.size() > 3 && !is_satisfying_fast(reduce(block.gap)))
      return false;
  }
  return true;
}

/**
 * Recursive evaluation of 31-4-2 avoidance: every gap must reduce to an
 * avoiding permutation, and sorting each gap descending must yield the
 * maximal permutation of the host's spec. Agrees with avoids_31_4_2 on
 * every input.
 */
inline bool avoids_3142v_fast(const Permutation& host) {
  if (host.empty()) return true;
  const LrmaxSpec spec = lrmax_spec(host);
  if (sort_gaps(host, GapOrder::descending) != maximal_permutation(spec))
    return false;
  for (const auto& block : decompose(host).blocks) {
    if (block.gap.size() > 3 && !avoids_3142v_fast(reduce(block.gap)))
      return false;
  }
  return true;
}

}  // namespace wilfcheck
