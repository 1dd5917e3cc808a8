#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wilfcheck/classes.hpp"
#include "wilfcheck/lrmax.hpp"
#include "wilfcheck/permutation.hpp"

namespace wilfcheck {

namespace detail {

/// values sorted ascending, then permuted so the result reduces to `order`:
/// out[j] is the order[j]-th smallest of `values`.
inline std::vector<int> arrange_by_rank(std::vector<int> values,
                                        const Permutation& order) {
  std::sort(values.begin(), values.end());
  std::vector<int> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    out[j] = values[order.values()[j] - 1];
  return out;
}

inline Permutation wilf_forward_rec(const Permutation& perm) {
  if (perm.empty()) return Permutation();
  const LrmaxSpec spec = lrmax_spec(perm);
  if (sort_gaps(perm, GapOrder::ascending) != minimal_permutation(spec))
    throw std::logic_error(
        "gap contents of a satisfying permutation must sort to the minimal fill; "
        "offending input " + to_text(perm));
  const Decomposition source = decompose(perm);
  Decomposition target = decompose(maximal_permutation(spec));
  for (int i = 0; i < static_cast<int>(source.blocks.size()); ++i) {
    const std::vector<int>& gap = source.blocks[i].gap;
    if (gap.empty()) continue;
    const Permutation relative_order = wilf_forward_rec(reduce(gap));
    target.blocks[i].gap = arrange_by_rank(std::move(target.blocks[i].gap),
                                           relative_order);
  }
  return reassemble(target);
}

inline Permutation wilf_inverse_rec(const Permutation& perm) {
  if (perm.empty()) return Permutation();
  const LrmaxSpec spec = lrmax_spec(perm);
  if (sort_gaps(perm, GapOrder::descending) != maximal_permutation(spec))
    throw std::logic_error(
        "gap contents of a 31-4-2-avoiding permutation must sort to the maximal "
        "fill; offending input " + to_text(perm));
  const Decomposition source = decompose(perm);
  Decomposition target = decompose(minimal_permutation(spec));
  for (int i = 0; i < static_cast<int>(source.blocks.size()); ++i) {
    const std::vector<int>& gap = source.blocks[i].gap;
    if (gap.empty()) continue;
    const Permutation relative_order = wilf_inverse_rec(reduce(gap));
    target.blocks[i].gap = arrange_by_rank(std::move(target.blocks[i].gap),
                                           relative_order);
  }
  return reassemble(target);
}

}  // namespace detail

/**
 * The spec-preserving bijection from 3-5-2-4-1-satisfying permutations onto
 * 31-4-2-avoiding permutations.
 *
 * Construction: decompose the input at its records and take the maximal
 * permutation of its spec as the target shape. Each gap's value set is taken
 * from the target, arranged in the relative order obtained by recursively
 * mapping the reduced source gap; records stay where the spec puts them.
 * The base case is the empty permutation.
 *
 * The input's gaps sort ascending to the minimal fill (that is what makes it
 * satisfying), the output's gaps sort descending to the maximal fill, and
 * gap-by-gap the recursion preserves membership, so the image is exactly the
 * avoiding class with the same spec.
 */
inline Permutation wilf_bijection(const Permutation& perm) {
  if (const auto occ = first_unextendable_3241(perm))
    throw std::domain_error(
        "input is not 3-5-2-4-1-satisfying: 3-2-4-1 occurrence at positions " +
        to_text(*occ) + " has no larger entry between its first two");
  return detail::wilf_forward_rec(perm);
}

/// Exact mirror of wilf_bijection: gap value sets come from the minimal
/// permutation of the spec and gaps are recursively inverted.
inline Permutation wilf_bijection_inverse(const Permutation& perm) {
  if (const auto occ = first_occurrence(perm, pattern_31_4_2()))
    throw std::domain_error("input contains 31-4-2: occurrence at positions " +
                            to_text(*occ));
  return detail::wilf_inverse_rec(perm);
}

}  // namespace wilfcheck
