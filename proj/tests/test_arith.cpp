#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "schurk/special.hpp"

using namespace schurk;

TEST_SUITE("core-arith") {
  TEST_CASE("det_exact examples") {
    CHECK(std::get<BigRat>(det_exact({{Scalar(BigRat(1))}})) == 1);
    Matrix<Scalar> g{{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)}};
    CHECK(std::get<BigRat>(det_exact(g)) == 1);
    Matrix<Scalar> a{{BigRat(2), BigRat(-1)}, {BigRat(-1), BigRat(2)}};
    CHECK(std::get<BigRat>(det_exact(a)) == 3);
    Matrix<Scalar> mixed{{BigRat(2), QRat(1)}, {BigRat(-1), BigRat(2)}};
    CHECK_THROWS_AS(det_exact(mixed), MathError);
  }

  TEST_CASE("Bareiss needs a row swap") {
    Matrix<BigRat> m{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
    CHECK(det(m) == det_cofactor(m));
    CHECK(det(m) == -2);
  }

  TEST_CASE("Real determinant") {
    Matrix<Real> m{{Real(2), Real(-1)}, {Real(-1), Real(2)}};
    CHECK(abs(det(m) - 3) < Real("1e-45"));
  }

  TEST_CASE("gamma_real") {
    CHECK(abs(gamma_real(Real(1)) - 1) < Real("1e-45"));
    CHECK(abs(gamma_real(Real(5)) - 24) < Real("1e-44"));
    Real sp = sqrt(boost::math::constants::pi<Real>());
    CHECK(abs(gamma_real(Real("0.5")) - sp) < Real("1e-45"));
    CHECK_THROWS_AS(gamma_real(Real(-2)), MathError);
  }

  TEST_CASE("barnes_g_int") {
    CHECK(barnes_g_int(1) == 1);
    CHECK(barnes_g_int(4) == 2);
    CHECK(barnes_g_int(5) == 12);
  }

  TEST_CASE("qgamma_real") {
    Real q("0.5");
    CHECK(abs(qgamma_real(Real(1), q) - 1) < Real("1e-40"));
    CHECK(abs(qgamma_real(Real(2), q) - 1) < Real("1e-40"));
    CHECK(abs(qgamma_real(Real(3), q) - Real("1.5")) < Real("1e-40"));
  }

  TEST_CASE("q-numbers") {
    CHECK(qnum_symmetric(1) == QRat(1));
    CHECK(qnum_symmetric(2) == QRat::u_pow(-1) + QRat::u_pow(1));
    CHECK(qnum_symmetric(-2) == -qnum_symmetric(2));
    CHECK(qnum_floor(3) == QRat(1) + QRat::q_pow(1) + QRat::q_pow(2));
    CHECK(qnum_floor(-1) == -QRat::q_pow(-1));
    CHECK(qnum_floor(0) == QRat(0));
  }

  TEST_CASE("QRat normal form") {
    QRat a = (QRat(1) - QRat::q_pow(3)) / (QRat(1) - QRat::q_pow(1));
    CHECK(a == QRat(1) + QRat::q_pow(1) + QRat::q_pow(2));
    CHECK(a.is_laurent());
    QRat b = QRat(1) / (QRat(1) + QRat::u_pow(1));
    CHECK_FALSE(b.is_laurent());
    CHECK(b * (QRat(1) + QRat::u_pow(1)) == QRat(1));
    CHECK(QRat::u_pow(-3).str() == "u^(-3)");
    CHECK(b.eval(BigRat(1)) == BigRat(1, 2));
    CHECK_THROWS_AS(QRat(1) / QRat(0), MathError);
  }

  TEST_CASE("parsing") {
    CHECK(parse_rat("3/6") == BigRat(1, 2));
    CHECK(parse_rat("-0.25") == BigRat(-1, 4));
    CHECK(rat_str(BigRat(4)) == "4/1");
    CHECK_THROWS_AS(parse_rat("x"), MathError);
    CHECK_THROWS_AS(parse_rat("1/0"), MathError);
    CHECK(parse_real("1/4") == Real("0.25"));
    CHECK(parse_real("2.5e-1") == Real("0.25"));
    CHECK_THROWS_AS(parse_real("abc"), MathError);
  }

  TEST_CASE("Poly") {
    RatPoly p({BigRat(1), BigRat(-2), BigRat(1)});
    CHECK(p.degree() == 2);
    CHECK(p.eval(BigRat(1)) == 0);
    CHECK(p.derivative() == RatPoly({BigRat(-2), BigRat(2)}));
    CHECK(gcd(p, RatPoly({BigRat(-1), BigRat(1)})) == RatPoly({BigRat(-1), BigRat(1)}));
    auto [qq, r] = divmod(p, RatPoly({BigRat(-1), BigRat(1)}));
    CHECK(r.is_zero());
    CHECK(qq == RatPoly({BigRat(-1), BigRat(1)}));
  }

  TEST_CASE("precision setting") {
    unsigned d = default_digits();
    CHECK(Real(1).precision() >= d);
    set_default_digits(80);
    CHECK(Real(1).precision() >= 80);
    set_default_digits(d);
    CHECK_THROWS_AS(set_default_digits(3), MathError);
  }
}
