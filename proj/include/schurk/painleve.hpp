#pragma once

#include <vector>

#include "schurk/ensembles.hpp"

namespace schurk {

// poly(x) * exp(rate * x)
struct ExpSeries {
  BigRat rate;
  RatPoly poly;
  // Taylor coefficients c_0..c_upto
  std::vector<BigRat> taylor(int upto) const;
  friend bool operator==(const ExpSeries& a, const ExpSeries& b) { return a.rate == b.rate && a.poly == b.poly; }
};

// L_k^(alpha)(x) = sum_i (-1)^i C(k+alpha, k-i) x^i / i!
RatPoly laguerre_poly(int k, int alpha);

// det[d^i p_j / dx^i]
template <class F>
Poly<F> wronskian(const std::vector<Poly<F>>& ps) {
  if (ps.empty()) throw MathError("wronskian of an empty list");
  const std::size_t n = ps.size();
  Matrix<Poly<F>> w(n, std::vector<Poly<F>>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Poly<F> d = ps[j];
    for (std::size_t i = 0; i < n; ++i) {
      w[i][j] = d;
      d = d.derivative();
    }
  }
  return det_cofactor(w);
}

// rate -M/2, poly = Wr_x of L_k^(2n)(-x), k = M..M+2n-1
ExpSeries f2n_wronskian(int n, int M);
// rate -M/2, poly from the partition sum over the 2n x M rectangle
ExpSeries f2n_schur(int n, int M);

struct F2nZero {
  BigRat schur, barnes;
};
F2nZero f2n_zero(int n, int M);

// b_1..b_upto with f(x) = f(0)(1 + b_1 x + b_2 x^2 + ...)
std::vector<BigRat> b_coeffs(int n, int M, int upto);
BigRat b2_closed(int n, int M);

// <det(y - Z)^{2n}> by Andreief with modified moments
template <class F>
F char_poly_moment(const EnsembleSpec& s, int M, int two_n, const F& y) {
  MomentTable<F> m(s, M);
  auto mt = [&](int p) {
    F r(0);
    for (int k = 0; k <= two_n; ++k) {
      F c = F(BigRat(binomial(two_n, k))) * ipow(y, two_n - k) * m(p + k);
      r = (k % 2) ? r - c : r + c;
    }
    return r;
  };
  auto a = make_matrix<F>(static_cast<std::size_t>(M), static_cast<std::size_t>(M)), b = a;
  for (int j = 0; j < M; ++j)
    for (int k = 0; k < M; ++k) {
      a[j][k] = mt(j + k);
      b[j][k] = m(j + k);
    }
  return det(std::move(a)) / det(std::move(b));
}

// G(M+2n+1)/(G(2n+1) G(M+1)): <det(-x-Z)^{2n}>_{LUE, alpha=2n} = prefactor * poly(x)
BigRat confluence_prefactor(int n, int M);

struct FermionCheck {
  Poly<QRat> expansion, oracle;
  QRat constant;      // oracle / expansion
  bool proportional;  // oracle == constant * expansion
  QRat z_hankel, z_product;
  QRat z_ratio;  // hankel / product
};
Poly<QRat> sw_fermion_partition(int M, int n);
Poly<QRat> sw_fermion_oracle(int M, int n);
QRat sw_partition_product(int M);
FermionCheck sw_fermion_check(int M, int n);

}  // namespace schurk
