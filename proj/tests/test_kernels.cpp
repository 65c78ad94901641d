#include <doctest.h>

#include "schurk/kernels.hpp"

using namespace schurk;

namespace {
using V = std::vector<BigRat>;
}

TEST_SUITE("kernels") {
  TEST_CASE("expansion table") {
    auto t = expansion_table<BigRat>(EnsembleSpec::lue(0), 2, 1);
    REQUIRE(t.size() == 3);
    CHECK(t[0].second == 1);
    CHECK(t[1].second == 1);
    CHECK(t[2].second == 2);
    CHECK(expansion_table<BigRat>(EnsembleSpec::gue(), 2, 2).size() == 1);
  }

  TEST_CASE("khat_schur") {
    CHECK(khat_schur(EnsembleSpec::gue(), 2, V{3, 5}, V{7, 11}) == 1);
    CHECK(khat_schur(EnsembleSpec::lue(0), 2, V{1}, V{1}) == 1);
    CHECK_THROWS_AS(khat_schur(EnsembleSpec::gue(), 3, V{0}, V{1}), MathError);
  }

  TEST_CASE("khat_double") {
    CHECK(khat_double(EnsembleSpec::gue(), 1, V{2}, V{3}) == 1);
    RationalSampler rng(11);
    for (int i = 0; i < 5; ++i) {
      V x{rng.next()}, y{rng.next()};
      CHECK(khat_double(EnsembleSpec::lue(0), 3, x, y) == khat_schur(EnsembleSpec::lue(0), 3, x, y));
    }
    auto p = rng.distinct(4);
    V x{p[0], p[1]}, y{p[2], p[3]};
    CHECK(khat_double(EnsembleSpec::gue(), 4, x, y) == khat_schur(EnsembleSpec::gue(), 4, x, y));
  }

  TEST_CASE("Chebyshev form") {
    CHECK(k2_chebyshev(EnsembleSpec::lue(0), 2, BigRat(3), BigRat(3)) == khat_schur(EnsembleSpec::lue(0), 2, V{3}, V{3}));
    for (BigRat x : {BigRat(2), BigRat(-1, 3)})
      CHECK(k2_chebyshev(EnsembleSpec::lue(0), 4, x, x) == khat_schur(EnsembleSpec::lue(0), 4, V{x}, V{x}));
    CHECK(k2_chebyshev(EnsembleSpec::gue(), 3, BigRat(4), BigRat(1)) == khat_schur(EnsembleSpec::gue(), 3, V{4}, V{1}));
    CHECK_THROWS_AS(k2_chebyshev(EnsembleSpec::gue(), 3, BigRat(2), BigRat(1)), MathError);
    Real r = k2_chebyshev<Real>(EnsembleSpec::gue(), 3, Real(2), Real(1), Real(sqrt(Real(2))));
    CHECK(abs(r - to_real(khat_schur(EnsembleSpec::gue(), 3, V{2}, V{1}))) < Real("1e-45"));
  }

  TEST_CASE("Christoffel-Darboux") {
    auto s = EnsembleSpec::lue(0);
    CHECK(kernel_cd(s, 1, BigRat(5), BigRat(7)) == 1);
    BigRat x(2, 3), y(-5, 4);
    CHECK(kernel_cd(s, 2, x, y) == 1 + (x - 1) * (y - 1));
    auto os = ortho_system<BigRat>(EnsembleSpec::jue(1, 2), 5);
    CHECK(kernel_cd(os, 4, x, y) == kernel_cd_formula(os, 4, x, y));
    CHECK(khat_cd(s, 3, V{x}, V{y}) == khat_schur(s, 3, V{x}, V{y}));
  }

  TEST_CASE("inverse Hankel generating function") {
    CHECK(hankel_inverse_gen(EnsembleSpec::lue(2), 1, BigRat(3), BigRat(4)) == BigRat(1, 2));
    RationalSampler rng(5);
    for (int i = 0; i < 5; ++i) {
      BigRat x = rng.next(), y = rng.next();
      CHECK(hankel_inverse_gen(EnsembleSpec::lue(0), 3, x, y) == kernel_cd(EnsembleSpec::lue(0), 3, x, y));
      CHECK(hankel_inverse_gen(EnsembleSpec::gue(), 4, x, y) == kernel_cd(EnsembleSpec::gue(), 4, x, y));
    }
  }

  TEST_CASE("Ginibre") {
    CHECK(ginibre_kernel(1, BigRat(3), BigRat(5)) == 1);
    CHECK(ginibre_kernel(2, BigRat(2), BigRat(1, 2)) == 2);
    BigRat x(3, 2), y(-2, 7);
    CHECK(ginibre_khat_schur(3, V{x}, V{y}) == ginibre_kernel(3, x, y));
    CHECK(real_ginibre_kernel(1, x, y) == x - y);
    CHECK(real_ginibre_kernel(2, BigRat(2), BigRat(1)) == 3);
    CHECK(real_ginibre_kernel(3, x, y) == -real_ginibre_kernel(3, y, x));
    CHECK(real_ginibre_oracle(3, x, y) == real_ginibre_kernel(3, x, y));
  }

  TEST_CASE("chiral kernels") {
    BigRat z(5, 3);
    CHECK(df_chiral_kernel(1, V{z}, 0, 0) == 1);
    CHECK(df_chiral_kernel(3, V{z}, 0, 0) == df_chiral_kernel_elementary(3, z, 0, 0));
    CHECK(df_chiral_kernel(3, V{z}, 0, 0) == df_chiral_kernel_n1<BigRat>(3, z, 0, 0, 1));
    V x{BigRat(2)}, y{BigRat(-3, 5)};
    CHECK(df_kernel_factorized(3, x, y, 1, 0) == df_khat_double(3, x, y, 1, 0));
  }

  TEST_CASE("Selberg and Dotsenko-Fateev") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {2, 1}}) {
      Real s1 = selberg_partition(1, Real(a), Real(b), Real(1));
      CHECK(abs(s1 - to_real(hankel_det<BigRat>(EnsembleSpec::jue(a, b), 1))) < Real("1e-45"));
    }
    Real s2 = selberg_partition(2, Real(0), Real(0), Real(1));
    CHECK(abs(s2 - to_real(hankel_det<BigRat>(EnsembleSpec::jue(0, 0), 2))) < Real("1e-45"));
    auto d = selberg_and_df_partition(1, Real("0.25"), Real("0.5"), Real(1));
    CHECK(isfinite(d.dotsenko_fateev));
    CHECK_THROWS_AS(df_partition(1, Real(0), Real(0), Real(1)), MathError);
  }

  TEST_CASE("symmetry") {
    CHECK(symmetry_check(EnsembleSpec::lue(0), 3, V{2}, V{5}, 1));
    auto s = EnsembleSpec::lue(0);
    V x{BigRat(2), BigRat(3)}, y{BigRat(-1, 2), BigRat(7)};
    CHECK(khat_schur(s, 4, x, y) == khat_schur(s, 4, V{y[1], x[1]}, V{y[0], x[0]}));
    V xg{BigRat(1), BigRat(4)}, yg{BigRat(2, 3), BigRat(-5)};
    CHECK(khat_schur(EnsembleSpec::gue(), 5, xg, yg) == khat_schur(EnsembleSpec::gue(), 5, V{yg[1], yg[0]}, V{xg[1], xg[0]}));
    int count = 0;
    CHECK(symmetry_check_all(s, 4, x, y, &count));
    CHECK(count == 24);
  }

  TEST_CASE("q-ensemble kernels") {
    auto s = EnsembleSpec::sw();
    std::vector<QRat> x{QRat(2)}, y{QRat(BigRat(1, 3))};
    CHECK(khat_schur(s, 3, x, y) == khat_double(s, 3, x, y));
    CHECK(khat_schur(s, 3, x, y) == khat_cd(s, 3, x, y));
  }

  TEST_CASE("real evaluation") {
    auto s = EnsembleSpec::lue(BigRat(1, 2));
    std::vector<Real> x{Real("0.3")}, y{Real("-1.7")};
    Real a = khat_schur(s, 4, x, y), b = khat_cd(s, 4, x, y);
    CHECK(abs(a - b) / abs(a) < Real("1e-40"));
  }
}
