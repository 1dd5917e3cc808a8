#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wilfcheck/pattern.hpp"
#include "wilfcheck/permutation.hpp"

namespace wilfcheck {

/**
 * Positions and values of the left-to-right maxima (record highs) of a
 * permutation, plus the ambient size n. Text form: "P=1,3,6;M=3,5,7;n=7".
 */
struct LrmaxSpec {
  std::vector<int> positions;
  std::vector<int> maxima;
  int n = 0;

  int record_count() const { return static_cast<int>(positions.size()); }

  friend bool operator==(const LrmaxSpec&, const LrmaxSpec&) = default;
};

inline LrmaxSpec lrmax_spec(const Permutation& perm) {
  LrmaxSpec spec;
  spec.n = perm.size();
  int best = 0;
  for (int i = 0; i < perm.size(); ++i) {
    const int v = perm.values()[i];
    if (v > best) {
      spec.positions.push_back(i + 1);
      spec.maxima.push_back(v);
      best = v;
    }
  }
  return spec;
}

/// True iff some permutation of {1..n} has this spec: positions start at 1
/// and strictly increase to at most n, maxima strictly increase to exactly n,
/// and each next record position comes no later than one past the previous
/// record value. The empty spec is valid exactly for n = 0.
inline bool is_valid_spec(const LrmaxSpec& spec) {
  const int r = spec.record_count();
  if (static_cast<int>(spec.maxima.size()) != r) return false;
  if (spec.n == 0) return r == 0;
  if (r == 0) return false;
  if (spec.positions.front() != 1) return false;
  if (spec.positions.back() > spec.n) return false;
  if (spec.maxima.front() < 1) return false;
  if (spec.maxima.back() != spec.n) return false;
  for (int i = 0; i + 1 < r; ++i) {
    if (spec.positions[i] >= spec.positions[i + 1]) return false;
    if (spec.maxima[i] >= spec.maxima[i + 1]) return false;
    if (spec.positions[i + 1] > spec.maxima[i] + 1) return false;
  }
  return true;
}

/**
 * A permutation cut at its records: block i carries the i-th record value
 * and the gap of entries that follow it, up to the next record (or the end).
 * Every gap entry is strictly smaller than its block's record.
 */
struct Decomposition {
  struct Block {
    int maximum = 0;
    std::vector<int> gap;

    friend bool operator==(const Block&, const Block&) = default;
  };
  std::vector<Block> blocks;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Decomposition decompose(const Permutation& perm) {
  const LrmaxSpec spec = lrmax_spec(perm);
  Decomposition dec;
  dec.blocks.reserve(spec.record_count());
  for (int i = 0; i < spec.record_count(); ++i) {
    Decomposition::Block block;
    block.maximum = spec.maxima[i];
    const int begin = spec.positions[i];  // 0-based index just past the record
    const int end = i + 1 < spec.record_count() ? spec.positions[i + 1] - 1
                                                : perm.size();
    block.gap.assign(perm.values().begin() + begin, perm.values().begin() + end);
    dec.blocks.push_back(std::move(block));
  }
  return dec;
}

inline Permutation reassemble(const Decomposition& dec) {
  std::vector<int> out;
  for (const auto& block : dec.blocks) {
    out.push_back(block.maximum);
    out.insert(out.end(), block.gap.begin(), block.gap.end());
  }
  return Permutation(std::move(out));
}

enum class GapOrder { ascending, descending };

/// Sorts each gap independently in the given direction; records stay put,
/// so the LRmax spec is preserved.
inline Permutation sort_gaps(const Permutation& perm, GapOrder order) {
  Decomposition dec = decompose(perm);
  for (auto& block : dec.blocks) {
    if (order == GapOrder::ascending)
      std::sort(block.gap.begin(), block.gap.end());
    else
      std::sort(block.gap.begin(), block.gap.end(), std::greater<int>());
  }
  return reassemble(dec);
}

inline std::string to_text(const LrmaxSpec& spec) {
  std::string out = "P=";
  for (std::size_t i = 0; i < spec.positions.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(spec.positions[i]);
  }
  out += ";M=";
  for (std::size_t i = 0; i < spec.maxima.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(spec.maxima[i]);
  }
  out += ";n=" + std::to_string(spec.n);
  return out;
}

inline LrmaxSpec parse_spec(std::string_view text) {
  const auto semi1 = text.find(';');
  const auto semi2 = semi1 == std::string_view::npos ? std::string_view::npos
                                                     : text.find(';', semi1 + 1);
  if (semi2 == std::string_view::npos)
    throw std::invalid_argument("spec text must have three ';'-separated fields");
  const std::string_view p_field = detail::trim(text.substr(0, semi1));
  const std::string_view m_field = detail::trim(text.substr(semi1 + 1, semi2 - semi1 - 1));
  const std::string_view n_field = detail::trim(text.substr(semi2 + 1));
  if (!p_field.starts_with("P="))
    throw std::invalid_argument("spec field '" + std::string(p_field) +
                                "' should start with P=");
  if (!m_field.starts_with("M="))
    throw std::invalid_argument("spec field '" + std::string(m_field) +
                                "' should start with M=");
  if (!n_field.starts_with("n="))
    throw std::invalid_argument("spec field '" + std::string(n_field) +
                                "' should start with n=");
  LrmaxSpec spec;
  spec.positions = detail::parse_int_list(p_field.substr(2), "position");
  spec.maxima = detail::parse_int_list(m_field.substr(2), "maximum");
  spec.n = detail::parse_int_token(n_field.substr(2), "size");
  if (spec.n < 0) throw std::invalid_argument("spec size n must be non-negative");
  return spec;
}

/**
 * Fill of a valid spec's non-record positions, left to right, with the
 * smallest unused element of [n]. The result has the given spec and is the
 * unique 3-2-1-avoiding permutation with that spec.
 */
inline Permutation minimal_permutation(const LrmaxSpec& spec) {
  if (!is_valid_spec(spec))
    throw std::domain_error("invalid spec " + to_text(spec));
  std::vector<int> out(spec.n, 0);
  std::vector<char> used(spec.n + 1, 0);
  for (int i = 0; i < spec.record_count(); ++i) {
    out[spec.positions[i] - 1] = spec.maxima[i];
    used[spec.maxima[i]] = 1;
  }
  int next = 1;
  for (int i = 0; i < spec.n; ++i) {
    if (out[i] != 0) continue;
    while (used[next]) ++next;
    out[i] = next;
    used[next] = 1;
  }
  return Permutation(std::move(out));
}

/**
 * Fill of a valid spec's non-record positions, left to right, with the
 * largest unused element that stays below the most recent record (so no new
 * record appears). The result is the unique 3-1-2-avoiding permutation with
 * the given spec.
 */
inline Permutation maximal_permutation(const LrmaxSpec& spec) {
  if (!is_valid_spec(spec))
    throw std::domain_error("invalid spec " + to_text(spec));
  std::vector<int> out(spec.n, 0);
  std::vector<char> used(spec.n + 1, 0);
  for (int i = 0; i < spec.record_count(); ++i) {
    out[spec.positions[i] - 1] = spec.maxima[i];
    used[spec.maxima[i]] = 1;
  }
  int record_index = 0;
  int governing = 0;
  for (int i = 0; i < spec.n; ++i) {
    if (out[i] != 0) {
      governing = spec.maxima[record_index++];
      continue;
    }
    int v = governing - 1;
    while (v >= 1 && used[v]) --v;
    if (v < 1) throw std::logic_error("maximal fill ran out of small values");
    out[i] = v;
    used[v] = 1;
  }
  return Permutation(std::move(out));
}

/// The classic spec-preserving bijection from 3-2-1-avoiding to
/// 3-1-2-avoiding permutations: re-fill the non-record positions maximally.
inline Permutation simion_schmidt(const Permutation& perm) {
  static const VincularPattern k321 = parse_pattern("3-2-1");
  if (const auto occ = first_occurrence(perm, k321))
    throw std::domain_error("input is not 3-2-1-avoiding: occurrence at positions " +
                            to_text(*occ));
  return maximal_permutation(lrmax_spec(perm));
}

inline Permutation simion_schmidt_inverse(const Permutation& perm) {
  static const VincularPattern k312 = parse_pattern("3-1-2");
  if (const auto occ = first_occurrence(perm, k312))
    throw std::domain_error("input is not 3-1-2-avoiding: occurrence at positions " +
                            to_text(*occ));
  return minimal_permutation(lrmax_spec(perm));
}

}  // namespace wilfcheck
