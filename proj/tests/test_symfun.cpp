#include <doctest.h>

#include "schurk/sampling.hpp"
#include "schurk/symfun.hpp"

using namespace schurk;

TEST_SUITE("symfun") {
  TEST_CASE("elementary and complete") {
    std::vector<BigRat> ones3(3, BigRat(1)), ones2(2, BigRat(1));
    CHECK(elementary(0, ones3) == 1);
    CHECK(complete_h(0, ones3) == 1);
    CHECK(elementary(2, ones3) == 3);
    CHECK(complete_h(2, ones2) == 3);
    CHECK(elementary(4, ones3) == 0);
    CHECK(complete_h(-1, ones3) == 0);
  }

  TEST_CASE("schur_eval") {
    std::vector<BigRat> z{BigRat(2), BigRat(-1, 3), BigRat(5)};
    CHECK(schur_eval(Partition(), z) == 1);
    CHECK(schur_eval(Partition({1}), z) == z[0] + z[1] + z[2]);
    CHECK(schur_eval(Partition({2, 1}), std::vector<BigRat>(3, BigRat(1))) == 8);
    CHECK(schur_eval(Partition({1, 1, 1, 1}), z) == 0);
    CHECK(schur_eval(Partition({2, 1}), z) == schur_bialternant(Partition({2, 1}), z));
  }

  TEST_CASE("schur_principal") {
    for (int M = 0; M <= 5; ++M) CHECK(schur_principal(Partition({1}), M) == M);
    CHECK(schur_principal(Partition({2, 1}), 3) == 8);
    CHECK(schur_principal(Partition({2, 2}), 4) == 20);
    CHECK(schur_principal(Partition({1, 1, 1}), 2) == 0);
  }

  TEST_CASE("qdim") {
    CHECK(qdim(Partition(), 3) == QRat(1));
    CHECK(qdim(Partition({1}), 2) == qnum_symmetric(2));
    CHECK(qdim(Partition({1}), 3) == qnum_symmetric(3));
    CHECK(qdim(Partition({2, 1}), 3).eval(BigRat(1)) == 8);
  }

  TEST_CASE("dual Cauchy") {
    auto p = dual_cauchy_check(std::vector<BigRat>{}, std::vector<BigRat>{BigRat(3)});
    CHECK(p.first == 1);
    CHECK(p.second == 1);
    p = dual_cauchy_check(std::vector<BigRat>{1, 1}, std::vector<BigRat>{1});
    CHECK(p.first == 4);
    CHECK(p.second == 4);
    RationalSampler rng(7);
    for (int i = 0; i < 5; ++i) {
      p = dual_cauchy_check(rng.distinct(2), rng.distinct(3));
      CHECK(p.first == p.second);
    }
  }

  TEST_CASE("chebyshev_u") {
    CHECK(chebyshev_u(0, BigRat(7)) == 1);
    CHECK(chebyshev_u(1, BigRat(7)) == 14);
    CHECK(chebyshev_u(2, BigRat(0)) == -1);
    for (int k = 0; k < 6; ++k) CHECK(chebyshev_u(k, BigRat(1)) == k + 1);
  }

  TEST_CASE("two-variable bridge") {
    BigRat x(3, 7);
    std::vector<BigRat> z{x, 1 / x};
    for (int j = 0; j <= 5; ++j)
      for (int k = 0; k <= 3; ++k) CHECK(schur_eval(Partition({k + j, k}), z) == chebyshev_u(j, (x + 1 / x) / 2));
  }
}
