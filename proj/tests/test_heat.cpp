#include <doctest.h>

#include "schurk/heat.hpp"

using namespace schurk;

TEST_SUITE("heat") {
  TEST_CASE("partial sums") {
    CHECK(heat_kernel_sum(HeatQuery(Real("0.3"), Real("1.2"), Real("-0.4"), 1)) == 1);
    Real q("0.5");
    Real s = heat_kernel_sum(HeatQuery(q, Real(0), Real(0)));
    CHECK(abs(s - 1 / (1 - q * q)) < Real("1e-28"));
    Real t = heat_kernel_sum(HeatQuery(q, Real(2), Real(2), 6)), want = 0;
    for (int j = 0; j < 6; ++j) want += pow(q, j) * (j + 1) * (j + 1);
    CHECK(abs(t - want) < Real("1e-45"));
    CHECK_THROWS_AS(HeatQuery(Real(1), Real(0), Real(0)), MathError);
    CHECK_THROWS_AS(HeatQuery(Real("0.5"), Real(3), Real(0)), MathError);
  }

  TEST_CASE("closed form") {
    CHECK(abs(heat_kernel_closed(Real("1e-40"), Real("1.3"), Real("0.2")) - 1) < Real("1e-35"));
    Real q("0.25");
    CHECK(abs(heat_kernel_closed(q, Real(0), Real(0)) - 1 / (1 - q * q)) < Real("1e-45"));
    CHECK(abs(heat_kernel_closed(Real("0.5"), Real(1), Real(-1)) - Real(4) / 9) < Real("1e-45"));
  }

  TEST_CASE("auto term count") {
    Real q("0.5");
    int J = heat_auto_terms(q);
    CHECK(pow(q, J) <= Real("1e-30") * pow(1 - q, 3));
    CHECK(pow(q, J - 1) > Real("1e-30") * pow(1 - q, 3));
  }

  TEST_CASE("Schur doubling") {
    auto p = schur_doubling_check(BigRat(3), BigRat(-2, 5), BigRat(1, 7), 1);
    CHECK(p.first == 1);
    CHECK(p.second == 1);
    auto d = schur_doubling(BigRat(1), BigRat(1), BigRat(1, 3), 6);
    for (int j = 0; j < 6; ++j) {
      BigRat w = BigRat((j + 1) * (j + 1)) * ipow(BigRat(1, 3), j);
      CHECK(d.schur_terms[j] == w);
      CHECK(d.h_terms[j] == w);
    }
    for (int k = 0; k <= 3; ++k) {
      auto e = schur_doubling(BigRat(5, 2), BigRat(-3, 4), BigRat(2, 9), 8, k);
      CHECK(e.schur_terms == e.chebyshev_terms);
    }
    CHECK_THROWS_AS(schur_doubling(BigRat(0), BigRat(1), BigRat(1, 2), 3), MathError);
  }
}
