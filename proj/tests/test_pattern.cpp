#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracle.hpp"
#include "wilfcheck/pattern.hpp"

using namespace wilfcheck;

TEST_CASE("pattern parsing") {
  const VincularPattern title = parse_pattern("31-4-2");
  CHECK(title.letters == Permutation({3, 1, 4, 2}));
  CHECK(title.glued == std::vector<bool>{true, false, false});

  const VincularPattern scattered = parse_pattern("3-2-4-1");
  CHECK(scattered.letters == Permutation({3, 2, 4, 1}));
  CHECK(scattered.glued == std::vector<bool>{false, false, false});

  const VincularPattern consecutive = parse_pattern("312");
  CHECK(consecutive.glued == std::vector<bool>{true, true});

  const VincularPattern single = parse_pattern("1");
  CHECK(single.length() == 1);
  CHECK(single.glued.empty());

  CHECK_THROWS_WITH(parse_pattern("3-1-4-22"),
                    Catch::Matchers::ContainsSubstring("repeated digit"));
  CHECK_THROWS_WITH(parse_pattern("3-1-5-2"),
                    Catch::Matchers::ContainsSubstring("permutation"));
  CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("3--1-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("-3-1-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("3-1-2-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("3a-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("0-1"), std::invalid_argument);
}

TEST_CASE("pattern text round-trips") {
  for (const char* text : {"31-4-2", "3-2-4-1", "312", "1", "3-5-2-4-1", "21-3"})
    CHECK(to_text(parse_pattern(text)) == text);
}

TEST_CASE("occurrence fixtures") {
  const Permutation host({3, 5, 1, 4, 2});

  const auto loose = occurrences(host, parse_pattern("3-1-4-2"));
  CHECK(std::find(loose.begin(), loose.end(), Occurrence{{1, 3, 4, 5}}) != loose.end());

  CHECK(occurrences(host, parse_pattern("31-4-2")).empty());
  CHECK(avoids(host, parse_pattern("31-4-2")));

  CHECK(occurrences(Permutation({3, 1, 4, 2}), parse_pattern("31-4-2")) ==
        std::vector<Occurrence>{Occurrence{{1, 2, 3, 4}}});

  CHECK(occurrences(Permutation::identity(6), parse_pattern("3-2-4-1")).empty());
  CHECK(avoids(Permutation(), parse_pattern("31-4-2")));
  CHECK(avoids(Permutation({2, 1}), parse_pattern("3-2-4-1")));
}

TEST_CASE("limit returns a prefix of the full lexicographic list") {
  const Permutation host({4, 3, 2, 1, 5});
  const VincularPattern pattern = parse_pattern("2-1");
  const auto all = occurrences(host, pattern);
  REQUIRE(all.size() == 6);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (std::size_t limit = 0; limit <= all.size(); ++limit) {
    const auto some = occurrences(host, pattern, limit);
    CHECK(some == std::vector<Occurrence>(all.begin(), all.begin() + limit));
  }
}

TEST_CASE("engine matches the brute-force oracle exhaustively") {
  const std::vector<const char*> patterns{"31-4-2", "3-1-4-2", "3-2-4-1", "3-2-1",
                                          "3-1-2",  "21-3",    "123",     "1-2",
                                          "2-31",   "3-5-2-4-1"};
  for (int n = 0; n <= 6; ++n) {
    oracle::for_each_perm(n, [&](const Permutation& p) {
      for (const char* text : patterns) {
        const VincularPattern pattern = parse_pattern(text);
        const auto got = occurrences(p, pattern);
        const auto want = oracle::occurrences(p, pattern.letters.values(), pattern.glued);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
          REQUIRE(got[i].indices == want[i]);
      }
    });
  }
}

TEST_CASE("every reported occurrence is a valid witness") {
  for (int n = 0; n <= 6; ++n) {
    oracle::for_each_perm(n, [&](const Permutation& p) {
      for (const char* text : {"31-4-2", "3-2-4-1", "312"}) {
        const VincularPattern pattern = parse_pattern(text);
        for (const Occurrence& occ : occurrences(p, pattern)) {
          REQUIRE(std::is_sorted(occ.indices.begin(), occ.indices.end()));
          std::vector<int> values;
          for (const int i : occ.indices) values.push_back(p.at(i));
          REQUIRE(reduce(values) == pattern.letters);
          for (std::size_t i = 0; i + 1 < occ.indices.size(); ++i)
            if (pattern.glued[i]) REQUIRE(occ.indices[i + 1] == occ.indices[i] + 1);
        }
      }
    });
  }
}

TEST_CASE("gluing only removes occurrences") {
  const VincularPattern glued = parse_pattern("31-4-2");
  const VincularPattern loose = parse_pattern("3-1-4-2");
  for (int n = 0; n <= 7; ++n) {
    oracle::for_each_perm(n, [&](const Permutation& p) {
      const auto tight = occurrences(p, glued);
      const auto wide = occurrences(p, loose);
      for (const Occurrence& occ : tight)
        REQUIRE(std::find(wide.begin(), wide.end(), occ) != wide.end());
    });
  }
}

TEST_CASE("classical scans agree with the generic engine") {
  CHECK(avoids_classical(Permutation({3, 1, 5, 2, 4, 7, 6}), ClassicalPattern::k321));
  CHECK(avoids_classical(Permutation({3, 2, 5, 4, 1, 7, 6}), ClassicalPattern::k312));
  CHECK_FALSE(avoids_classical(Permutation({3, 2, 1}), ClassicalPattern::k321));

  const VincularPattern k321 = parse_pattern("3-2-1");
  const VincularPattern k312 = parse_pattern("3-1-2");
  for (int n = 0; n <= 7; ++n) {
    oracle::for_each_perm(n, [&](const Permutation& p) {
      REQUIRE(avoids_classical(p, ClassicalPattern::k321) == avoids(p, k321));
      REQUIRE(avoids_classical(p, ClassicalPattern::k312) == avoids(p, k312));
    });
  }
}
