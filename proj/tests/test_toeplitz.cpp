#include <doctest.h>

#include "schurk/toeplitz.hpp"

using namespace schurk;

TEST_SUITE("toeplitz") {
  TEST_CASE("symbol coefficients") {
    CHECK(fh_coeff(0, 0, 0) == 1);
    CHECK(fh_coeff(0, 0, 1) == 0);
    CHECK(fh_coeff(1, 1, 0) == 2);
    CHECK(fh_coeff(1, 1, 1) == -1);
    CHECK(fh_coeff(1, 1, -1) == -1);
    CHECK(fh_coeff(2, 0, 0) == 1);
    CHECK(fh_coeff(2, 0, 1) == -2);
    CHECK(fh_coeff(2, 0, 2) == 1);
    CHECK(fh_coeff(2, 0, 3) == 0);
    CHECK_THROWS_AS(fh_coeff(-1, 0, 0), MathError);
  }

  TEST_CASE("exact inverse") {
    CHECK(toeplitz_inverse_exact(0, 0, 3) == identity_matrix<BigRat>(3));
    Matrix<BigRat> want{{BigRat(2, 3), BigRat(1, 3)}, {BigRat(1, 3), BigRat(2, 3)}};
    CHECK(toeplitz_inverse_exact(1, 1, 2) == want);
    // T for (1-z) is lower bidiagonal with -1 below the diagonal; its inverse is all ones below
    Matrix<BigRat> l{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
    CHECK(toeplitz_inverse_exact(1, 0, 3) == l);
  }

  TEST_CASE("closed inverse") {
    for (int M = 2; M <= 4; ++M) CHECK(toeplitz_inverse_closed(1, 1, M) == toeplitz_inverse_exact(1, 1, M));
    CHECK(toeplitz_inverse_closed(2, 1, 4) == toeplitz_inverse_exact(2, 1, 4));
    CHECK(toeplitz_inverse_closed(3, 3, 5) == toeplitz_inverse_exact(3, 3, 5));
    CHECK(toeplitz_inverse_closed(0, 2, 4) == toeplitz_inverse_exact(0, 2, 4));
  }

  TEST_CASE("Duduchava-Roch") {
    CHECK(duduchava_roch_check(0, 0, 3));
    CHECK(duduchava_roch_check(1, 1, 3));
    CHECK(duduchava_roch_check(2, 1, 4));
    auto b = duduchava_roch_blocks(0, 0, 2);
    CHECK(b.lhs == identity_matrix<BigRat>(2));
  }

  TEST_CASE("generating function") {
    BigRat x(2, 3), y(-5, 2);
    BigRat id = 0;
    for (int j = 0; j < 3; ++j) id += ipow(x * y, j);
    CHECK(fh_kernel_generating<BigRat>(0, 0, 3, x, y) == id);
    CHECK(fh_kernel_generating<BigRat>(2, 1, 1, x, y) == 1 / fh_coeff(2, 1, 0));
    CHECK(fh_kernel_circular<BigRat>(1, 1, 2, x, y) == fh_kernel_generating<BigRat>(1, 1, 2, x, y));
    CHECK(circular_elementary_avg(1, 1, 0, 0, 0) == 1);
  }
}
