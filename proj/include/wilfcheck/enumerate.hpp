#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "wilfcheck/classes.hpp"
#include "wilfcheck/permutation.hpp"

namespace wilfcheck {

// Enumeration guards. Factorial growth makes anything past these pointless
// on desk hardware; counts stay inside 64 bits well past them.
inline constexpr int kDefaultStreamGuard = 12;
inline constexpr int kHardCountGuard = 20;
inline constexpr int kDefaultClassCountCeiling = 10;
inline constexpr int kDefaultSpecCountCeiling = 12;

/// Streams every element of S_n exactly once, in lexicographic order,
/// without materializing all n! of them.
class PermutationStream {
 public:
  explicit PermutationStream(int n, int guard = kDefaultStreamGuard) {
    if (n < 0 || n > guard)
      throw std::invalid_argument("permutation stream size " + std::to_string(n) +
                                  " outside [0," + std::to_string(guard) + "]");
    current_.resize(n);
    std::iota(current_.begin(), current_.end(), 1);
  }

  std::optional<Permutation> next() {
    if (done_) return std::nullopt;
    Permutation out{std::vector<int>(current_)};
    done_ = !std::next_permutation(current_.begin(), current_.end());
    return out;
  }

 private:
  std::vector<int> current_;
  bool done_ = false;
};

/// Catalan number C_n, exact in 64 bits for n <= 30.
inline std::uint64_t catalan(int n) {
  if (n < 0 || n > 30)
    throw std::invalid_argument("catalan argument " + std::to_string(n) +
                                " outside [0,30]");
  std::uint64_t c = 1;
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(n); ++k)
    c = c * (4 * k + 2) / (k + 2);
  return c;
}

/**
 * Visits every valid LRmax spec for [n] by backtracking directly on the
 * validity conditions, never by scanning S_n. Specs arrive in a fixed
 * deterministic order.
 */
template <typename Fn>
void for_each_valid_spec(int n, Fn&& fn) {
  if (n < 0 || n > kHardCountGuard)
    throw std::invalid_argument("spec enumeration size " + std::to_string(n) +
                                " outside [0," + std::to_string(kHardCountGuard) + "]");
  if (n == 0) {
    fn(LrmaxSpec{{}, {}, 0});
    return;
  }
  std::vector<int> positions{1};
  std::vector<int> maxima{0};
  auto rec = [&](auto&& self) -> void {
    if (maxima.back() == n) {
      fn(LrmaxSpec{positions, maxima, n});
      return;
    }
    const int position_limit = std::min(n, maxima.back() + 1);
    for (int p = positions.back() + 1; p <= position_limit; ++p) {
      for (int m = maxima.back() + 1; m <= n; ++m) {
        positions.push_back(p);
        maxima.push_back(m);
        self(self);
        positions.pop_back();
        maxima.pop_back();
      }
    }
  };
  for (int m1 = 1; m1 <= n; ++m1) {
    maxima.back() = m1;
    rec(rec);
  }
}

inline std::uint64_t count_valid_specs(int n) {
  std::uint64_t count = 0;
  for_each_valid_spec(n, [&](const LrmaxSpec&) { ++count; });
  return count;
}

struct ClassCounts {
  std::uint64_t satisfying = 0;
  std::uint64_t avoiding = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Counts both classes over the block of S_n whose first entry is
/// `first_value`, in lexicographic order. Pure; partitions merge by addition.
inline ClassCounts count_partition(int n, int first_value, bool use_fast) {
  ClassCounts counts;
  std::vector<int> suffix;
  suffix.reserve(n - 1);
  for (int v = 1; v <= n; ++v)
    if (v != first_value) suffix.push_back(v);
  std::vector<int> values(n);
  values[0] = first_value;
  do {
    std::copy(suffix.begin(), suffix.end(), values.begin() + 1);
    const Permutation perm{std::vector<int>(values)};
    if (use_fast ? is_satisfying_fast(perm) : is_satisfying_naive(perm))
      ++counts.satisfying;
    if (use_fast ? avoids_3142v_fast(perm) : avoids_31_4_2(perm))
      ++counts.avoiding;
  } while (std::next_permutation(suffix.begin(), suffix.end()));
  return counts;
}

/// One row of a counting run. satisfying == avoiding and specs == catalan are
/// the statements under test, asserted by the verification suite, never here.
struct CountReport {
  int n = 0;
  std::uint64_t satisfying = 0;
  std::uint64_t avoiding = 0;
  std::uint64_t specs = 0;
  std::uint64_t catalan = 0;
  std::int64_t elapsed_ms = 0;
};

struct CountOptions {
  bool use_fast = true;
  int jobs = 0;  // 0 = all hardware threads
  int guard = kDefaultStreamGuard;
};

/**
 * Counts both classes over all of S_n. With more than one job the work is
 * split by first entry; per-partition results land in a fixed slot and merge
 * in index order, so reports are identical run to run apart from elapsed_ms.
 */
inline CountReport count_classes(int n, const CountOptions& options = {}) {
  if (n < 0 || n > options.guard || n > kHardCountGuard)
    throw std::invalid_argument("class count size " + std::to_string(n) +
                                " outside [0," +
                                std::to_string(std::min(options.guard, kHardCountGuard)) +
                                "]");
  const auto start = std::chrono::steady_clock::now();
  ClassCounts totals;
  if (n == 0) {
    totals = {1, 1};  // the empty permutation belongs to both classes
  } else {
    int jobs = options.jobs > 0
                   ? options.jobs
                   : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, n));
    std::vector<ClassCounts> parts(n);
    if (jobs == 1) {
      for (int first = 1; first <= n; ++first)
        parts[first - 1] = count_partition(n, first, options.use_fast);
    } else {
      std::atomic<int> next_first{1};
      std::vector<std::thread> pool;
      pool.reserve(jobs);
      for (int j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
          for (int first = next_first.fetch_add(1); first <= n;
               first = next_first.fetch_add(1))
            parts[first - 1] = count_partition(n, first, options.use_fast);
        });
      }
      for (auto& worker : pool) worker.join();
    }
    for (const auto& part : parts) {
      totals.satisfying += part.satisfying;
      totals.avoiding += part.avoiding;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CountReport report;
  report.n = n;
  report.satisfying = totals.satisfying;
  report.avoiding = totals.avoiding;
  report.specs = count_valid_specs(n);
  report.catalan = catalan(n);
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return report;
}

inline void write_csv(std::span<const CountReport> rows, std::ostream& os) {
  os << "n,satisfying,avoiding,specs,catalan,elapsed_ms\n";
  for (const auto& row : rows)
    os << row.n << ',' << row.satisfying << ',' << row.avoiding << ','
       << row.specs << ',' << row.catalan << ',' << row.elapsed_ms << '\n';
}

inline void write_json(std::span<const CountReport> rows, std::ostream& os) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& row : rows) {
    array.push_back({{"n", row.n},
                     {"satisfying", row.satisfying},
                     {"avoiding", row.avoiding},
                     {"specs", row.specs},
                     {"catalan", row.catalan},
                     {"elapsed_ms", row.elapsed_ms}});
  }
  os << array.dump(2) << '\n';
}

}  // namespace wilfcheck
