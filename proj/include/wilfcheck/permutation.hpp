#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wilfcheck {

/**
 * A permutation of {1..n} in one-line notation. Positions and values are
 * 1-based throughout; n = 0 (the empty permutation) is a legal value.
 * Instances are immutable and validated eagerly on construction.
 */
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      const int v = values_[i];
      if (v < 1 || v > n)
        throw std::invalid_argument("value " + std::to_string(v) +
                                    " out of range at index " +
                                    std::to_string(i + 1));
      if (seen[v])
        throw std::invalid_argument("repeated value " + std::to_string(v) +
                                    " at index " + std::to_string(i + 1));
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Value at 1-based position `pos`.
  int at(int pos) const { return values_.at(pos - 1); }

  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Order-isomorphic copy of a sequence of distinct integers: the smallest
/// entry becomes 1, the next smallest 2, and so on.
inline Permutation reduce(std::span<const int> values) {
  const int k = static_cast<int>(values.size());
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> out(k);
  for (int rank = 0; rank < k; ++rank) {
    if (rank > 0 && values[order[rank]] == values[order[rank - 1]])
      throw std::invalid_argument("repeated entry " +
                                  std::to_string(values[order[rank]]));
    out[order[rank]] = rank + 1;
  }
  return Permutation(std::move(out));
}

inline Permutation reduce(const std::vector<int>& values) {
  return reduce(std::span<const int>(values));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline int parse_int_token(std::string_view token, std::string_view what) {
  token = trim(token);
  if (token.empty())
    throw std::invalid_argument("empty " + std::string(what) + " token");
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw std::invalid_argument("bad " + std::string(what) + " token '" +
                                std::string(token) + "'");
  return value;
}

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int_token(text.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Parses the comma-separated text form, e.g. "3,1,5,4,2,7,6". The empty
/// string denotes the empty permutation.
inline Permutation parse_permutation(std::string_view text) {
  return Permutation(detail::parse_int_list(text, "permutation"));
}

inline std::string to_text(const Permutation& perm) {
  std::string out;
  for (int i = 0; i < perm.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(perm.values()[i]);
  }
  return out;
}

}  // namespace wilfcheck
