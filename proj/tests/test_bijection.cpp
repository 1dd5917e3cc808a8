#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "oracle.hpp"
#include "wilfcheck/bijection.hpp"

using namespace wilfcheck;

TEST_CASE("fixtures") {
  CHECK(wilf_bijection(Permutation()) == Permutation());
  CHECK(wilf_bijection(Permutation({3, 1, 4, 2})) == Permutation({3, 2, 4, 1}));
  CHECK(wilf_bijection(Permutation({3, 1, 2})) == Permutation({3, 1, 2}));

  CHECK(wilf_bijection_inverse(Permutation()) == Permutation());
  CHECK(wilf_bijection_inverse(Permutation({3, 2, 4, 1})) == Permutation({3, 1, 4, 2}));
  CHECK(wilf_bijection_inverse(Permutation({3, 1, 2})) == Permutation({3, 1, 2}));
}

TEST_CASE("domain rejection names a witnessing occurrence") {
  CHECK_THROWS_WITH(wilf_bijection(Permutation({3, 2, 4, 1})),
                    Catch::Matchers::ContainsSubstring("1,2,3,4"));
  CHECK_THROWS_AS(wilf_bijection(Permutation({3, 2, 4, 1})), std::domain_error);
  CHECK_THROWS_WITH(wilf_bijection_inverse(Permutation({3, 1, 4, 2})),
                    Catch::Matchers::ContainsSubstring("1,2,3,4"));
  CHECK_THROWS_AS(wilf_bijection_inverse(Permutation({3, 1, 4, 2})), std::domain_error);
}

TEST_CASE("spec-preserving bijection onto the avoiding class, exhaustively") {
  for (int n = 0; n <= 7; ++n) {
    std::vector<Permutation> image;
    std::vector<Permutation> avoiding;
    oracle::for_each_perm(n, [&](const Permutation& p) {
      if (avoids_31_4_2(p)) avoiding.push_back(p);
      if (!oracle::satisfying(p)) return;
      const Permutation q = wilf_bijection(p);
      REQUIRE(lrmax_spec(q) == lrmax_spec(p));
      REQUIRE(avoids_31_4_2(q));
      REQUIRE(wilf_bijection_inverse(q) == p);

      // gap sizes are pinned by the shared spec
      const Decomposition dp = decompose(p);
      const Decomposition dq = decompose(q);
      REQUIRE(dp.blocks.size() == dq.blocks.size());
      for (std::size_t i = 0; i < dp.blocks.size(); ++i)
        REQUIRE(dp.blocks[i].gap.size() == dq.blocks[i].gap.size());

      image.push_back(q);
    });
    std::sort(image.begin(), image.end());
    REQUIRE(std::adjacent_find(image.begin(), image.end()) == image.end());
    std::sort(avoiding.begin(), avoiding.end());
    REQUIRE(image == avoiding);

    for (const Permutation& q : avoiding)
      REQUIRE(wilf_bijection(wilf_bijection_inverse(q)) == q);
  }
}
