#include <doctest.h>

#include "schurk/ensembles.hpp"

using namespace schurk;

namespace {
const Partition p1({1}), p2({2}), p11({1, 1}), p21({2, 1});
}

TEST_SUITE("ensembles") {
  TEST_CASE("moments") {
    CHECK(moment<BigRat>(EnsembleSpec::gue(), 4) == 3);
    CHECK(moment<BigRat>(EnsembleSpec::gue(), 5) == 0);
    CHECK(moment<BigRat>(EnsembleSpec::lue(0), 3) == 6);
    CHECK(moment<QRat>(EnsembleSpec::sw(), 0) == QRat::u_pow(-1));
    CHECK(moment<QRat>(EnsembleSpec::sw(), 1) == QRat::u_pow(-4));
    CHECK(abs(moment<Real>(EnsembleSpec::lue(0), 3) - 6) < Real("1e-45"));
    CHECK_THROWS_AS(moment<BigRat>(EnsembleSpec::sw(), 1), MathError);
    CHECK_THROWS_AS(moment<BigRat>(EnsembleSpec::lue_tilde(3), 2), MathError);
  }

  TEST_CASE("make_ensemble") {
    auto s = make_ensemble("jue", "0.7", "1.3", "1/2");
    CHECK(s.kind == Kind::JUE);
    CHECK(s.alpha == BigRat(7, 10));
    CHECK_THROWS_AS(make_ensemble("cue", "0", "0", "1/2"), MathError);
    CHECK_THROWS_AS(make_ensemble("lue", "-1", "0", "1/2"), MathError);
    CHECK_THROWS_AS(make_ensemble("sw", "0", "0", "1"), MathError);
  }

  TEST_CASE("hankel determinants") {
    CHECK(hankel_det<BigRat>(EnsembleSpec::lue(2), 1) == moment<BigRat>(EnsembleSpec::lue(2), 0));
    CHECK(hankel_det<BigRat>(EnsembleSpec::gue(), 2) == 1);
    CHECK(hankel_det<BigRat>(EnsembleSpec::lue(0), 2) == 1);
    CHECK(partition_function<BigRat>(EnsembleSpec::gue(), 3) == 2);
  }

  TEST_CASE("orthogonal polynomials") {
    auto g = ortho_system<BigRat>(EnsembleSpec::gue(), 2);
    CHECK(g.P[2] == RatPoly({BigRat(-1), BigRat(0), BigRat(1)}));
    CHECK(g.h[2] == 2);
    auto l = ortho_system<BigRat>(EnsembleSpec::lue(0), 1);
    CHECK(l.P[1] == RatPoly({BigRat(-1), BigRat(1)}));
    CHECK(l.h[1] == 1);
    CHECK(l.P[0] == RatPoly(BigRat(1)));
    CHECK(l.h[0] == 1);
  }

  TEST_CASE("oracle") {
    CHECK(schur_avg_oracle<BigRat>(EnsembleSpec::jue(1, 2), Partition(), 3) == 1);
    CHECK(schur_avg_oracle<BigRat>(EnsembleSpec::gue(), p2, 2) == 3);
    CHECK(schur_avg_oracle<BigRat>(EnsembleSpec::lue(0), p1, 2) == 4);
    CHECK_THROWS_AS(schur_avg_oracle<BigRat>(EnsembleSpec::gue(), Partition({1, 1, 1}), 2), MathError);
  }

  TEST_CASE("GUE") {
    CHECK(schur_avg_gue(p1, 3) == 0);
    CHECK(schur_avg_gue(p2, 2) == 3);
    CHECK(schur_avg_gue(p11, 2) == schur_avg_oracle<BigRat>(EnsembleSpec::gue(), p11, 2));
    CHECK(schur_avg_gue(p11, 2) == -1);
  }

  TEST_CASE("LUE") {
    CHECK(schur_avg_lue(Partition(), 3, 2) == 1);
    CHECK(schur_avg_lue(p1, 2, 0) == 4);
    for (int M = 1; M <= 4; ++M)
      for (int a = 0; a <= 3; ++a) CHECK(schur_avg_lue(p1, M, a) == M * (M + a));
    CHECK(schur_avg_lue(p1, 3, BigRat(1, 2)) == BigRat(21, 2));
    CHECK(abs(schur_avg_lue_real(p1, 3, Real("0.5")) - Real("10.5")) < Real("1e-45"));
  }

  TEST_CASE("JUE") {
    CHECK(schur_avg_jue(Partition(), 2, 1, 1) == 1);
    CHECK(schur_avg_jue(p1, 1, 0, 0) == BigRat(1, 2));
    for (const auto& mu : enumerate_bounded(2, 2)) {
      Real exact = to_real(schur_avg_jue(mu, 2, 1, 2));
      CHECK(abs(exact - schur_avg_jue_real(mu, 2, Real(1), Real(2))) < Real("1e-45"));
    }
    CHECK(schur_avg_jue(p21, 3, BigRat(7, 10), BigRat(13, 10)) ==
          schur_avg_oracle<BigRat>(EnsembleSpec::jue(BigRat(7, 10), BigRat(13, 10)), p21, 3));
  }

  TEST_CASE("JUE tilde") {
    CHECK(schur_avg_jue_tilde(Partition(), 2, 1, 5) == 1);
    CHECK(schur_avg_jue_tilde(p1, 1, 0, 3) == BigRat(1, 2));
    auto s = EnsembleSpec::jue_tilde(1, 5);
    CHECK(schur_avg_jue_tilde(p1, 2, 1, 5) == schur_avg_oracle<BigRat>(s, p1, 2));
    CHECK_THROWS_AS(schur_avg_jue_tilde(p1, 2, 1, 2), MathError);
  }

  TEST_CASE("LUE tilde") {
    CHECK(schur_avg_lue_tilde(Partition(), 2, 9) == 1);
    CHECK(schur_avg_lue_tilde(p1, 1, 5) == schur_avg_oracle<BigRat>(EnsembleSpec::lue_tilde(5), p1, 1));
    CHECK(schur_avg_lue_tilde(p11, 2, 9) == schur_avg_oracle<BigRat>(EnsembleSpec::lue_tilde(9), p11, 2));
    CHECK(schur_avg_lue_tilde(p21, 2, BigRat(19, 2)) ==
          schur_avg_oracle<BigRat>(EnsembleSpec::lue_tilde(BigRat(19, 2)), p21, 2));
  }

  TEST_CASE("Stieltjes-Wigert") {
    CHECK(schur_avg_sw(Partition(), 2) == QRat(1));
    CHECK(schur_avg_sw(p1, 1) == QRat::u_pow(-3));
    CHECK(schur_avg_sw(p1, 2) == QRat::u_pow(-6) * qnum_symmetric(2));
    CHECK(schur_avg_sw(p21, 3) == schur_avg_oracle<QRat>(EnsembleSpec::sw(), p21, 3));
  }

  TEST_CASE("q-Laguerre") {
    CHECK(schur_avg_qlue(Partition(), 2, 1) == QRat(1));
    CHECK(schur_avg_qlue(p1, 1, 0) == QRat::q_pow(-1));
    CHECK(schur_avg_qlue(p1, 2, 1) == schur_avg_oracle<QRat>(EnsembleSpec::qlue(1), p1, 2));
    Real q("0.5");
    Real a = schur_avg_qlue(p21, 2, 1).eval(Real(sqrt(q)));
    CHECK(abs(a - schur_avg_qlue_real(p21, 2, Real(1) + Real("1e-30"), q)) / a < Real("1e-20"));
  }

  TEST_CASE("Ginibre") {
    CHECK(schur_pair_avg_ginibre(Partition(), Partition(), 3) == 1);
    CHECK(schur_pair_avg_ginibre(p1, Partition(), 3) == 0);
    for (int M = 1; M <= 4; ++M) CHECK(schur_pair_avg_ginibre(p1, p1, M) == M);
  }

  TEST_CASE("Kadell") {
    CHECK(jack_avg_jacobi_coeff<BigRat>(Partition(), 3, 1, 2, BigRat(1, 2)) == 1);
    CHECK(jack_avg_jacobi_coeff<BigRat>(p1, 2, 0, 0, 1, 1) == schur_avg_jue(p1, 2, 0, 0));
    CHECK(jack_avg_jacobi_coeff<BigRat>(p21, 3, 1, 0, 1) == schur_avg_jue(p21, 3, 1, 0));
    CHECK_THROWS_AS(jack_avg_jacobi_coeff<BigRat>(Partition({3}), 2, 0, 0, 1, 1), MathError);
  }

  TEST_CASE("Askey limit") {
    auto e = askey_limit_check(Partition(), 2, Real("10.5"), Real("0.5"));
    CHECK(abs(e.qlue_side - 1) < Real("1e-40"));
    CHECK(abs(e.sw_side - 1) < Real("1e-40"));
    for (const auto& [mu, M, q] : std::vector<std::tuple<Partition, int, const char*>>{{p1, 1, "0.5"}, {p11, 2, "0.3333333333333333333333333333333333333333333333333333"}}) {
      Real d20 = abs(askey_limit_check(mu, M, Real("20.5"), Real(q)).ratio() - 1);
      Real d40 = abs(askey_limit_check(mu, M, Real("40.5"), Real(q)).ratio() - 1);
      CHECK(d40 < d20);
    }
    CHECK_THROWS_AS(askey_limit_check(p1, 1, Real(3), Real("0.5")), MathError);
  }
}
