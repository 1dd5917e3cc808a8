#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "wilfcheck/permutation.hpp"

using wilfcheck::Permutation;

TEST_CASE("construction validates eagerly") {
  CHECK(Permutation({3, 1, 5, 4, 2, 7, 6}).size() == 7);
  CHECK(Permutation().size() == 0);
  CHECK(Permutation(std::vector<int>{}).empty());

  CHECK_THROWS_WITH(Permutation({1, 1}),
                    Catch::Matchers::ContainsSubstring("index 2"));
  CHECK_THROWS_AS(Permutation({0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({-1, 1}), std::invalid_argument);
}

TEST_CASE("identity and accessors") {
  const Permutation id = Permutation::identity(4);
  CHECK(id.values() == std::vector<int>{1, 2, 3, 4});
  CHECK(id.at(1) == 1);
  CHECK(id.at(4) == 4);
  CHECK(Permutation::identity(0).empty());
}

TEST_CASE("reduce maps to the order-isomorphic permutation") {
  CHECK(wilfcheck::reduce({9, 4, 7}) == Permutation({3, 1, 2}));
  CHECK(wilfcheck::reduce({3, 5, 1, 4, 2}) == Permutation({3, 5, 1, 4, 2}));
  CHECK(wilfcheck::reduce(std::vector<int>{}) == Permutation());
  CHECK(wilfcheck::reduce({-7, 100, 0}) == Permutation({1, 3, 2}));
  CHECK_THROWS_AS(wilfcheck::reduce({2, 2}), std::invalid_argument);
}

TEST_CASE("text form round-trips") {
  CHECK(wilfcheck::to_text(Permutation({3, 1, 5, 4, 2, 7, 6})) == "3,1,5,4,2,7,6");
  CHECK(wilfcheck::to_text(Permutation()) == "");
  CHECK(wilfcheck::parse_permutation("3,1,5,4,2,7,6") ==
        Permutation({3, 1, 5, 4, 2, 7, 6}));
  CHECK(wilfcheck::parse_permutation("") == Permutation());
  CHECK(wilfcheck::parse_permutation(" 2 , 1 ") == Permutation({2, 1}));

  CHECK_THROWS_WITH(wilfcheck::parse_permutation("1,x,2"),
                    Catch::Matchers::ContainsSubstring("'x'"));
  CHECK_THROWS_AS(wilfcheck::parse_permutation("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(wilfcheck::parse_permutation("1,2,"), std::invalid_argument);
  CHECK_THROWS_AS(wilfcheck::parse_permutation("1,1"), std::invalid_argument);
}

TEST_CASE("reduce undoes any strictly increasing relabeling") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 8);
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    const Permutation perm{std::vector<int>(values)};

    // strictly increasing map into a wider range
    std::vector<int> table(n + 1, 0);
    int next = 1;
    for (int v = 1; v <= n; ++v) {
      next += 1 + static_cast<int>(rng() % 9);
      table[v] = next;
    }
    std::vector<int> widened(n);
    for (int i = 0; i < n; ++i) widened[i] = table[values[i]];
    CHECK(wilfcheck::reduce(widened) == perm);
  }
}
