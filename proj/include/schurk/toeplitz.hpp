#pragma once

#include "schurk/arith.hpp"

namespace schurk {

// Pure singularity at z0 = 1: omega_g(z) = (1-z)^g, tilde omega_d(z) = (1-1/z)^d.
struct FHSymbol {
  int gamma = 0, delta = 0;
  FHSymbol(int g, int d);
  // coefficient of z^k in (1-z)^g (1-1/z)^d
  BigRat coeff(int k) const;
};

BigRat fh_coeff(int g, int d, int k);

// entry (j,k) = c_{j-k}
Matrix<BigRat> toeplitz_matrix(int g, int d, int M);
Matrix<BigRat> toeplitz_inverse_exact(int g, int d, int M);
// 1-based closed form, valid for g, d >= 0
Matrix<BigRat> toeplitz_inverse_closed(int g, int d, int M);

struct DRBlocks {
  Matrix<BigRat> lhs, rhs;
  bool equal;
};
DRBlocks duduchava_roch_blocks(int g, int d, int M);
bool duduchava_roch_check(int g, int d, int M);

// sum_{j,k<N} x^{N-j-1} ybar^{N-k-1} [T_N^{-1}]_{jk}, 0-based
template <class F>
F fh_kernel_from_inverse(const Matrix<BigRat>& inv, const F& x, const F& yb) {
  const int N = static_cast<int>(inv.size());
  F r(0);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k)
      if (inv[j][k] != 0) r += F(inv[j][k]) * ipow(x, N - j - 1) * ipow(yb, N - k - 1);
  return r;
}

template <class F>
F fh_kernel_generating(int g, int d, int N, const F& x, const F& yb) {
  return fh_kernel_from_inverse(toeplitz_inverse_exact(g, d, N), x, yb);
}

// Z_M <e_a ebar_b> over the circular ensemble with the FH weight, as a Toeplitz minor
BigRat circular_elementary_avg(int g, int d, int M, int a, int b);
// inverse entries rebuilt from the circular averages
Matrix<BigRat> toeplitz_inverse_circular(int g, int d, int N);

template <class F>
F fh_kernel_circular(int g, int d, int N, const F& x, const F& yb) {
  return fh_kernel_from_inverse(toeplitz_inverse_circular(g, d, N), x, yb);
}

}  // namespace schurk
