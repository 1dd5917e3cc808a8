#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wilfcheck/permutation.hpp"

namespace wilfcheck {

/**
 * A vincular (dashed) pattern: a reduced pattern together with adjacency
 * constraints. glued[i] == true means pattern letters i and i+1 must occupy
 * adjacent positions in the host.
 *
 * Text form: dash-separated groups of digits 1-9, letters inside a group
 * being pairwise glued. "31-4-2" glues the 3 and the 1; "3-1-4-2" is fully
 * scattered; "312" is a consecutive pattern.
 */
struct VincularPattern {
  Permutation letters;
  std::vector<bool> glued;

  int length() const { return letters.size(); }

  friend bool operator==(const VincularPattern&, const VincularPattern&) = default;
};

/// A witnessed containment: 1-based host positions, strictly increasing,
/// whose values reduce to the pattern and honor its glue constraints.
struct Occurrence {
  std::vector<int> indices;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

inline std::string to_text(const Occurrence& occ) {
  std::string out;
  for (std::size_t i = 0; i < occ.indices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(occ.indices[i]);
  }
  return out;
}

inline VincularPattern parse_pattern(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty pattern");
  std::vector<int> letters;
  std::vector<bool> glued;
  bool group_open = false;
  for (const char c : text) {
    if (c == '-') {
      if (!group_open)
        throw std::invalid_argument("empty group in pattern '" + std::string(text) + "'");
      group_open = false;
      continue;
    }
    if (c < '1' || c > '9')
      throw std::invalid_argument("bad character '" + std::string(1, c) +
                                  "' in pattern '" + std::string(text) + "'");
    if (!letters.empty()) glued.push_back(group_open);
    letters.push_back(c - '0');
    group_open = true;
  }
  if (!group_open)
    throw std::invalid_argument("empty group in pattern '" + std::string(text) + "'");
  const int k = static_cast<int>(letters.size());
  std::vector<char> seen(10, 0);
  for (const int d : letters) {
    if (d > k)
      throw std::invalid_argument("pattern '" + std::string(text) +
                                  "' digits do not form a permutation of 1.." +
                                  std::to_string(k));
    if (seen[d])
      throw std::invalid_argument("repeated digit " + std::to_string(d) +
                                  " in pattern '" + std::string(text) + "'");
    seen[d] = 1;
  }
  return VincularPattern{Permutation(std::move(letters)), std::move(glued)};
}

inline std::string to_text(const VincularPattern& pattern) {
  std::string out;
  for (int i = 0; i < pattern.length(); ++i) {
    if (i > 0 && !pattern.glued[i - 1]) out += '-';
    out += static_cast<char>('0' + pattern.letters.values()[i]);
  }
  return out;
}

/**
 * Exhaustive backtracking search over index tuples. Visits occurrences in
 * lexicographic index order; `visit` receives the 0-based host indices and
 * returns true to stop the search.
 */
template <typename Visitor>
void for_each_occurrence(const Permutation& host, const VincularPattern& pattern,
                         Visitor&& visit) {
  const std::vector<int>& h = host.values();
  const std::vector<int>& q = pattern.letters.values();
  const int n = host.size();
  const int k = pattern.length();
  if (k > n) return;
  std::vector<int> pos(k);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) return visit(std::span<const int>(pos));
    const int room = n - k + depth;  // leave space for the remaining letters
    int first = depth == 0 ? 0 : pos[depth - 1] + 1;
    int stop = room;
    if (depth > 0 && pattern.glued[depth - 1]) stop = first;  // adjacency forced
    stop = std::min(stop, room);
    for (int c = first; c <= stop; ++c) {
      bool ok = true;
      for (int a = 0; a < depth; ++a) {
        if ((h[pos[a]] < h[c]) != (q[a] < q[depth])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pos[depth] = c;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
}

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// All occurrences of `pattern` in `host` (or the first `limit` of them),
/// in lexicographic index order, with 1-based indices.
inline std::vector<Occurrence> occurrences(const Permutation& host,
                                           const VincularPattern& pattern,
                                           std::size_t limit = kNoLimit) {
  std::vector<Occurrence> out;
  if (limit == 0) return out;
  for_each_occurrence(host, pattern, [&](std::span<const int> idx) {
    Occurrence occ;
    occ.indices.reserve(idx.size());
    for (const int i : idx) occ.indices.push_back(i + 1);
    out.push_back(std::move(occ));
    return out.size() >= limit;
  });
  return out;
}

inline std::optional<Occurrence> first_occurrence(const Permutation& host,
                                                  const VincularPattern& pattern) {
  auto found = occurrences(host, pattern, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

inline bool avoids(const Permutation& host, const VincularPattern& pattern) {
  return occurrences(host, pattern, 1).empty();
}

enum class ClassicalPattern { k321, k312 };

/// Specialized quadratic scans for the two classical length-3 patterns.
/// Agrees with the generic engine on "3-2-1" and "3-1-2".
inline bool avoids_classical(const Permutation& host, ClassicalPattern which) {
  const std::vector<int>& v = host.values();
  const int n = host.size();
  std::vector<int> prefix_max(n, 0);
  for (int i = 1; i < n; ++i)
    prefix_max[i] = std::max(prefix_max[i - 1], v[i - 1]);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (which == ClassicalPattern::k321) {
        if (prefix_max[j] > v[j] && v[j] > v[k]) return false;
      } else {
        if (prefix_max[j] > v[k] && v[k] > v[j]) return false;
      }
    }
  }
  return true;
}

}  // namespace wilfcheck
