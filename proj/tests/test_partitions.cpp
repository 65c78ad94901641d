#include <doctest.h>

#include <set>

#include "schurk/partitions.hpp"
#include "schurk/special.hpp"

using namespace schurk;

TEST_SUITE("partitions") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(Partition({1, 2}), MathError);
    CHECK_THROWS_AS(Partition({2, -1}), MathError);
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({3, 1}).size() == 4);
    CHECK(Partition({3, 1})[5] == 0);
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition("2,2,1") == Partition({2, 2, 1}));
  }

  TEST_CASE("conjugate") {
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({6, 6, 5, 3})) == Partition({4, 4, 4, 3, 3, 2}));
    CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
  }

  TEST_CASE("enumerate_bounded") {
    CHECK(enumerate_bounded(0, 3) == std::vector<Partition>{Partition()});
    CHECK(enumerate_bounded(3, 0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_bounded(1, 2) == std::vector<Partition>{Partition(), Partition({1}), Partition({2})});
    CHECK(enumerate_bounded(2, 2).size() == 6);
    // size ascending, lexicographically descending within a size
    auto y = enumerate_bounded(2, 2);
    CHECK(y[2] == Partition({2}));
    CHECK(y[3] == Partition({1, 1}));
    for (int L = 0; L <= 6; ++L)
      for (int M = 0; M <= 6; ++M) CHECK(BigInt(enumerate_bounded(L, M).size()) == binomial(L + M, L));
  }

  TEST_CASE("rectangle_complement") {
    CHECK(rectangle_complement(Partition({3, 1}), 4, 6) == Partition({6, 6, 5, 3}));
    CHECK(rectangle_complement(Partition(), 2, 3) == Partition({3, 3}));
    CHECK(rectangle_complement(Partition({3, 3}), 2, 3) == Partition());
    CHECK_THROWS_AS(rectangle_complement(Partition({4}), 2, 3), MathError);
    CHECK(fits_in(Partition({3, 1}), 4, 6));
    CHECK_FALSE(fits_in(Partition({1, 1, 1}), 2, 6));
    // complement of mu and complement of its conjugate are conjugate
    Partition mu({3, 1});
    CHECK(conjugate(rectangle_complement(mu, 4, 6)) == rectangle_complement(conjugate(mu), 6, 4));
  }

  TEST_CASE("hook_content_data") {
    auto one = hook_content_data(Partition({1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].hook == 1);
    CHECK(one[0].content == 0);
    std::multiset<int> hooks, contents;
    for (const auto& c : hook_content_data(Partition({2, 1}))) {
      hooks.insert(c.hook);
      contents.insert(c.content);
    }
    CHECK(hooks == std::multiset<int>{1, 1, 3});
    CHECK(contents == std::multiset<int>{-1, 0, 1});
    hooks.clear();
    for (const auto& c : hook_content_data(Partition({2}))) hooks.insert(c.hook);
    CHECK(hooks == std::multiset<int>{1, 2});
  }
}
