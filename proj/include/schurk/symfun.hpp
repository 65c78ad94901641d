#pragma once

#include <utility>
#include <vector>

#include "schurk/arith.hpp"
#include "schurk/partitions.hpp"
#include "schurk/special.hpp"

namespace schurk {

// e_0..e_kmax of the points z
template <class F>
std::vector<F> elementary_all(int kmax, const std::vector<F>& z) {
  std::vector<F> e(static_cast<std::size_t>(kmax + 1), F(0));
  e[0] = F(1);
  for (const F& x : z)
    for (int k = kmax; k >= 1; --k) e[k] += x * e[k - 1];
  return e;
}

template <class F>
std::vector<F> complete_all(int kmax, const std::vector<F>& z) {
  std::vector<F> h(static_cast<std::size_t>(kmax + 1), F(0));
  h[0] = F(1);
  for (const F& x : z)
    for (int k = 1; k <= kmax; ++k) h[k] += x * h[k - 1];
  return h;
}

template <class F>
F elementary(int k, const std::vector<F>& z) {
  if (k < 0) return F(0);
  return elementary_all(k, z)[k];
}

template <class F>
F complete_h(int k, const std::vector<F>& z) {
  if (k < 0) return F(0);
  return complete_all(k, z)[k];
}

// Jacobi-Trudi det[h_{l_i - i + j}]
template <class F>
F schur_eval(const Partition& l, const std::vector<F>& z) {
  const int n = l.length();
  if (n == 0) return F(1);
  if (n > static_cast<int>(z.size())) return F(0);
  std::vector<F> h = complete_all(l[0] + n, z);
  auto H = [&](int k) { return k < 0 ? F(0) : h[static_cast<std::size_t>(k)]; };
  auto m = make_matrix<F>(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = H(l[i] - i + j);
  return det(std::move(m));
}

// det[z_i^{l_j + M - j}] / det[z_i^{M - j}], distinct points only
template <class F>
F schur_bialternant(const Partition& l, const std::vector<F>& z) {
  const int M = static_cast<int>(z.size());
  if (l.length() > M) return F(0);
  auto num = make_matrix<F>(z.size(), z.size()), den = num;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      num[i][j] = ipow(z[i], l[j] + M - 1 - j);
      den[i][j] = ipow(z[i], M - 1 - j);
    }
  F d = det(den);
  if (is_zero(d)) throw MathError("bialternant needs distinct points");
  return det(num) / d;
}

BigRat schur_principal(const Partition& l, int M);
QRat qdim(const Partition& mu, int M);

// U_k(w) via U_{k+1} = 2w U_k - U_{k-1}
template <class F>
F chebyshev_u(int k, const F& w) {
  if (k < 0) throw MathError("chebyshev_u: negative degree");
  F a(1), b = F(2) * w;
  if (k == 0) return a;
  for (int i = 1; i < k; ++i) {
    F c = F(2) * w * b - a;
    a = b;
    b = c;
  }
  return b;
}

// (prod_{i,j}(1 + t_i z_j), sum over Y_{#t,#z} of s_l(t) s_l'(z))
template <class F>
std::pair<F, F> dual_cauchy_check(const std::vector<F>& t, const std::vector<F>& z) {
  F lhs(1);
  for (const F& a : t)
    for (const F& b : z) lhs *= F(1) + a * b;
  F rhs(0);
  for (const auto& l : enumerate_bounded(static_cast<int>(t.size()), static_cast<int>(z.size())))
    rhs += schur_eval(l, t) * schur_eval(conjugate(l), z);
  return {lhs, rhs};
}

}  // namespace schurk
