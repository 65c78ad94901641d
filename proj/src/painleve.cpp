#include "schurk/painleve.hpp"

namespace schurk {

std::vector<BigRat> ExpSeries::taylor(int upto) const {
  std::vector<BigRat> c(static_cast<std::size_t>(upto + 1), BigRat(0));
  // e^{rate x} coefficients rate^i / i!
  std::vector<BigRat> e(static_cast<std::size_t>(upto + 1));
  e[0] = 1;
  for (int i = 1; i <= upto; ++i) e[i] = e[i - 1] * rate / i;
  for (int k = 0; k <= upto; ++k)
    for (int i = 0; i <= k; ++i) c[k] += poly.coeff(static_cast<std::size_t>(i)) * e[k - i];
  return c;
}

RatPoly laguerre_poly(int k, int alpha) {
  if (k < 0) throw MathError("laguerre_poly: negative degree");
  std::vector<BigRat> c(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) {
    BigRat v = BigRat(binomial(k + alpha, k - i), factorial(i));
    c[i] = i % 2 ? BigRat(-v) : v;
  }
  return RatPoly(std::move(c));
}

ExpSeries f2n_wronskian(int n, int M) {
  if (n < 1 || M < 1) throw MathError("f2n requires n, M >= 1");
  std::vector<RatPoly> ps;
  for (int k = M; k < M + 2 * n; ++k) ps.push_back(laguerre_poly(k, 2 * n).reflect());
  return {BigRat(-M, 2), wronskian(ps)};
}

ExpSeries f2n_schur(int n, int M) {
  if (n < 1 || M < 1) throw MathError("f2n requires n, M >= 1");
  const int L = 2 * n;
  BigRat pre = BigRat(barnes_g_int(2 * n + 1), barnes_g_int(M + 2 * n + 1));
  std::vector<BigRat> c(static_cast<std::size_t>(L * M + 1), BigRat(0));
  for (const auto& mu : enumerate_bounded(L, M)) {
    Partition l = rectangle_complement(mu, L, M), lc = conjugate(l);
    BigRat t = schur_principal(l, L) * schur_principal(lc, M + L);
    for (int j = 1; j <= M; ++j) t *= BigRat(factorial(lc[j - 1] - j + M));
    c[static_cast<std::size_t>(mu.size())] += pre * t;
  }
  return {BigRat(-M, 2), RatPoly(std::move(c))};
}

F2nZero f2n_zero(int n, int M) {
  if (n < 0 || M < 0) throw MathError("f2n_zero: negative argument");
  std::vector<int> rect(static_cast<std::size_t>(M), 2 * n);
  BigRat s = schur_principal(Partition(rect), M + 2 * n);
  BigInt g2 = barnes_g_int(2 * n + 1), g2m = barnes_g_int(2 * n + M + 1);
  BigRat b(barnes_g_int(M + 1) * barnes_g_int(4 * n + M + 1) * g2 * g2, barnes_g_int(4 * n + 1) * g2m * g2m);
  return {s, b};
}

std::vector<BigRat> b_coeffs(int n, int M, int upto) {
  auto c = f2n_schur(n, M).taylor(upto);
  if (c[0] == 0) throw MathError("b_coeffs: f(0) = 0");
  std::vector<BigRat> b;
  for (int k = 1; k <= upto; ++k) b.push_back(c[k] / c[0]);
  return b;
}

BigRat b2_closed(int n, int M) { return BigRat(-M * (M + 4 * n), 8 * (4 * n + 1) * (4 * n - 1)); }

BigRat confluence_prefactor(int n, int M) {
  return BigRat(barnes_g_int(M + 2 * n + 1), barnes_g_int(2 * n + 1) * barnes_g_int(M + 1));
}

Poly<QRat> sw_fermion_partition(int M, int n) {
  const int L = 2 * n;
  std::vector<QRat> c(static_cast<std::size_t>(L * M + 1), QRat(0));
  for (const auto& l : enumerate_bounded(L, M)) {
    Partition lc = conjugate(l);
    long e = -static_cast<long>(3 * M + 1) * l.size();  // exponent of u
    for (int j = 1; j <= M; ++j) e += -static_cast<long>(lc[j - 1]) * lc[j - 1] + 2L * j * lc[j - 1];
    QRat t = QRat::u_pow(e) * QRat(schur_principal(l, L)) * qdim(lc, M);
    if (l.size() % 2) t = -t;
    c[static_cast<std::size_t>(L * M - l.size())] += t;
  }
  QRat z = hankel_det<QRat>(EnsembleSpec::sw(), M);
  return z * Poly<QRat>(std::move(c));
}

Poly<QRat> sw_fermion_oracle(int M, int n) {
  EnsembleSpec s = EnsembleSpec::sw();
  MomentTable<QRat> m(s, M);
  const int L = 2 * n;
  auto mt = [&](int p) {
    std::vector<QRat> c(static_cast<std::size_t>(L + 1), QRat(0));
    for (int k = 0; k <= L; ++k) {
      QRat v = QRat(BigRat(binomial(L, k))) * m(p + k);
      c[static_cast<std::size_t>(L - k)] = k % 2 ? -v : v;
    }
    return Poly<QRat>(std::move(c));
  };
  Matrix<Poly<QRat>> a(static_cast<std::size_t>(M), std::vector<Poly<QRat>>(static_cast<std::size_t>(M)));
  for (int j = 0; j < M; ++j)
    for (int k = 0; k < M; ++k) a[j][k] = mt(j + k);
  return det_cofactor(a);
}

QRat sw_partition_product(int M) {
  // prod_{j<M} Gamma_q(1+j) (1-q)^{M(M-1)/2} q^{-M(M^2-1)/6} = prod_{j<M} prod_{i<=j}(1-q^i) q^{-M(M^2-1)/6}
  QRat r = QRat::q_pow(-static_cast<long>(M) * (M * M - 1) / 6);
  for (int j = 1; j < M; ++j)
    for (int i = 1; i <= j; ++i) r *= QRat(1) - QRat::q_pow(i);
  return r;
}

FermionCheck sw_fermion_check(int M, int n) {
  FermionCheck f;
  f.expansion = sw_fermion_partition(M, n);
  f.oracle = sw_fermion_oracle(M, n);
  if (f.expansion.is_zero()) throw MathError("fermion expansion vanished");
  f.constant = f.oracle.lead() / f.expansion.lead();
  f.proportional = f.oracle == f.constant * f.expansion;
  f.z_hankel = hankel_det<QRat>(EnsembleSpec::sw(), M);
  f.z_product = sw_partition_product(M);
  f.z_ratio = f.z_hankel / f.z_product;
  return f;
}

}  // namespace schurk
