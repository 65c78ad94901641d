#include <doctest.h>

#include "schurk/painleve.hpp"

using namespace schurk;

TEST_SUITE("painleve") {
  TEST_CASE("Laguerre polynomials") {
    CHECK(laguerre_poly(0, 3) == RatPoly(BigRat(1)));
    CHECK(laguerre_poly(1, 0) == RatPoly({BigRat(1), BigRat(-1)}));
    CHECK(laguerre_poly(2, 0) == RatPoly({BigRat(1), BigRat(-2), BigRat(1, 2)}));
  }

  TEST_CASE("wronskian") {
    RatPoly p({BigRat(3), BigRat(0), BigRat(2)});
    CHECK(wronskian(std::vector<RatPoly>{p}) == p);
    CHECK(wronskian(std::vector<RatPoly>{RatPoly(BigRat(1)), RatPoly({BigRat(0), BigRat(1)})}) == RatPoly(BigRat(1)));
    RatPoly a = laguerre_poly(1, 2).reflect(), b = laguerre_poly(2, 2).reflect();
    RatPoly w = wronskian(std::vector<RatPoly>{a, b});
    CHECK(w == a * b.derivative() - b * a.derivative());
    CHECK(w.degree() == 2);
  }

  TEST_CASE("f2n") {
    for (auto [n, M] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
      auto w = f2n_wronskian(n, M), s = f2n_schur(n, M);
      CHECK(w == s);
      CHECK(w.poly.degree() == 2 * n * M);
      CHECK(w.rate == BigRat(-M, 2));
      CHECK(s.poly.coeff(0) == f2n_zero(n, M).schur);
    }
    // leading term: lambda = empty contributes G(2n+1)/G(M+2n+1) prod_j (M-j)!
    auto s = f2n_schur(1, 3);
    CHECK(s.poly.lead() == BigRat(barnes_g_int(3) * barnes_g_int(4), barnes_g_int(6)));
  }

  TEST_CASE("f2n(0)") {
    CHECK(f2n_zero(1, 1).schur == 6);
    CHECK(f2n_zero(1, 1).barnes == 6);
    CHECK(f2n_zero(1, 2).schur == 20);
    CHECK(f2n_zero(3, 0).schur == 1);
    CHECK(f2n_zero(3, 0).barnes == 1);
  }

  TEST_CASE("b coefficients") {
    auto b = b_coeffs(1, 2, 2);
    CHECK(b[0] == 0);
    CHECK(b[1] == BigRat(-1, 10));
    CHECK(b2_closed(2, 3) == BigRat(-11, 168));
    CHECK(b_coeffs(2, 3, 2)[1] == BigRat(-11, 168));
  }

  TEST_CASE("confluence with the characteristic polynomial moment") {
    BigRat m = char_poly_moment<BigRat>(EnsembleSpec::lue(2), 2, 2, BigRat(-3));
    CHECK(m == confluence_prefactor(1, 2) * f2n_wronskian(1, 2).poly.eval(BigRat(3)));
    CHECK(f2n_wronskian(1, 2).poly.eval(BigRat(3)) == BigRat(779, 4));
  }

  TEST_CASE("Stieltjes-Wigert fermion") {
    auto o = sw_fermion_oracle(1, 1);
    CHECK(o == Poly<QRat>({QRat::u_pow(-9), -QRat(2) * QRat::u_pow(-4), QRat::u_pow(-1)}));
    auto f = sw_fermion_check(2, 1);
    CHECK(f.proportional);
    CHECK(f.constant == QRat(1));
    CHECK(f.z_ratio == QRat::u_pow(-8));
    CHECK(sw_fermion_partition(2, 0) == Poly<QRat>(hankel_det<QRat>(EnsembleSpec::sw(), 2)));
  }
}
