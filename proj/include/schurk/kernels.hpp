#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "schurk/ensembles.hpp"
#include "schurk/sampling.hpp"

namespace schurk {

// <s_mu> by closed form in the field F (oracle where no closed form exists).
template <class F>
F schur_avg_closed(const EnsembleSpec& s, const Partition& mu, int M);
template <>
inline BigRat schur_avg_closed<BigRat>(const EnsembleSpec& s, const Partition& mu, int M) {
  return schur_avg_exact(s, mu, M);
}
template <>
inline QRat schur_avg_closed<QRat>(const EnsembleSpec& s, const Partition& mu, int M) {
  if (s.kind == Kind::SW) return schur_avg_sw(mu, M);
  if (s.kind == Kind::qLUE) return schur_avg_qlue(mu, M, static_cast<int>(to_long(s.alpha)));
  return QRat(schur_avg_exact(s, mu, M));
}
template <>
inline Real schur_avg_closed<Real>(const EnsembleSpec& s, const Partition& mu, int M) {
  switch (s.kind) {
    case Kind::LUE: return schur_avg_lue_real(mu, M, to_real(s.alpha));
    case Kind::JUE: return schur_avg_jue_real(mu, M, to_real(s.alpha), to_real(s.beta));
    case Kind::qLUE:
      if (!is_integer(s.alpha)) return schur_avg_qlue_real(mu, M, to_real(s.alpha), to_real(s.q));
      return schur_avg_qlue(mu, M, static_cast<int>(to_long(s.alpha))).eval(Real(sqrt(to_real(s.q))));
    case Kind::SW: return schur_avg_sw(mu, M).eval(Real(sqrt(to_real(s.q))));
    default: return to_real(schur_avg_exact(s, mu, M));
  }
}

template <class F>
using KernelExpansion = std::vector<std::pair<Partition, F>>;

// lambda in Y_{2n,N-n}  ->  <s_lambda'>
template <class F>
KernelExpansion<F> expansion_table(const EnsembleSpec& s, int N, int n) {
  if (n < 0 || N < n) throw MathError("expansion_table: need 0 <= n <= N");
  const int M = N - n;
  KernelExpansion<F> out;
  for (const auto& l : enumerate_bounded(2 * n, M)) out.emplace_back(l, schur_avg_closed<F>(s, conjugate(l), M));
  return out;
}

template <class F>
std::vector<F> dual_vars(const std::vector<F>& x) {
  std::vector<F> v;
  for (const F& a : x) {
    if (is_zero(a)) throw MathError("kernel points must be nonzero");
    v.push_back(F(-1) / a);
  }
  return v;
}

template <class F>
std::vector<F> t_vector(const std::vector<F>& x, const std::vector<F>& y) {
  if (x.size() != y.size()) throw MathError("x and y must have the same length");
  std::vector<F> t = dual_vars(x), ty = dual_vars(y);
  t.insert(t.end(), ty.begin(), ty.end());
  return t;
}

template <class F>
F khat_from_table(const KernelExpansion<F>& table, const std::vector<F>& t) {
  F r(0);
  for (const auto& [l, c] : table) r += schur_eval(l, t) * c;
  return r;
}

template <class F>
F khat_schur(const EnsembleSpec& s, int N, const std::vector<F>& x, const std::vector<F>& y) {
  const int n = static_cast<int>(x.size());
  return khat_from_table(expansion_table<F>(s, N, n), t_vector(x, y));
}

template <class F>
F khat_double(const EnsembleSpec& s, int N, const std::vector<F>& x, const std::vector<F>& y) {
  const int n = static_cast<int>(x.size()), M = N - n;
  if (M < 0) throw MathError("khat_double: N < n");
  MomentTable<F> m(s, M);
  auto ys = enumerate_bounded(n, M);
  std::vector<F> xv = dual_vars(x), yv = dual_vars(y), sy;
  for (const auto& mu : ys) sy.push_back(schur_eval(mu, yv));
  F r(0);
  for (const auto& l : ys) {
    F sx = schur_eval(l, xv);
    if (is_zero(sx)) continue;
    Partition lc = conjugate(l);
    for (std::size_t k = 0; k < ys.size(); ++k) {
      if (is_zero(sy[k])) continue;
      r += sx * sy[k] * pair_avg_oracle(m, lc, conjugate(ys[k]), M);
    }
  }
  return r;
}

template <class F>
F kernel_cd(const OrthoSystem<F>& os, int N, const F& x, const F& y) {
  if (static_cast<int>(os.P.size()) < N) throw MathError("kernel_cd: orthogonal system too short");
  F r(0);
  for (int j = 0; j < N; ++j) r += os.P[j].eval(x) * os.P[j].eval(y) / os.h[j];
  return r;
}

template <class F>
F kernel_cd(const EnsembleSpec& s, int N, const F& x, const F& y) {
  return kernel_cd(ortho_system<F>(s, N), N, x, y);
}

// (P_N(x) P_{N-1}(y) - P_{N-1}(x) P_N(y)) / (h_{N-1} (x - y))
template <class F>
F kernel_cd_formula(const OrthoSystem<F>& os, int N, const F& x, const F& y) {
  if (x == y) throw MathError("kernel_cd_formula needs x != y");
  const auto &P = os.P[N], &Q = os.P[N - 1];
  return (P.eval(x) * Q.eval(y) - Q.eval(x) * P.eval(y)) / (os.h[N - 1] * (x - y));
}

template <class F>
F vandermonde(const std::vector<F>& z) {
  F r(1);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) r *= z[i] - z[j];
  return r;
}

// K^(n) = det[K_N(x_i,y_j)] / (Delta(x) Delta(y))
template <class F>
F multi_kernel_cd(const OrthoSystem<F>& os, int N, const std::vector<F>& x, const std::vector<F>& y) {
  const std::size_t n = x.size();
  F d = vandermonde(x) * vandermonde(y);
  if (is_zero(d)) throw MathError("multi-point kernel needs distinct x_i and distinct y_i");
  auto k = make_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i][j] = kernel_cd(os, N, x[i], y[j]);
  return det(std::move(k)) / d;
}

template <class F>
F khat_cd(const EnsembleSpec& s, int N, const std::vector<F>& x, const std::vector<F>& y) {
  const int n = static_cast<int>(x.size());
  auto os = ortho_system<F>(s, N);
  F pre(1);
  for (int j = N - n; j < N; ++j) pre *= os.h[j];
  for (int i = 0; i < n; ++i) pre /= ipow(x[i] * y[i], N - n);
  return pre * multi_kernel_cd(os, N, x, y);
}

std::optional<BigRat> exact_sqrt(const BigRat& v);

// sum over lambda in Y_{2,N-1} of <s_lambda'> (xy)^{-|lambda|/2} U_{l1-l2}(-(x+y)/(2 sqrt(xy)))
template <class F>
F k2_chebyshev(const EnsembleSpec& s, int N, const F& x, const F& y, const F& sqrt_xy) {
  if (!(sqrt_xy * sqrt_xy == x * y) && field_traits<F>::exact) throw MathError("k2_chebyshev: bad square root");
  const int M = N - 1;
  const F w = -(x + y) / (F(2) * sqrt_xy);
  F r(0);
  for (int l1 = 0; l1 <= M; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2) {
      Partition l({l1, l2});
      r += schur_avg_closed<F>(s, conjugate(l), M) * ipow(sqrt_xy, -(l1 + l2)) * chebyshev_u(l1 - l2, w);
    }
  return r;
}

inline BigRat k2_chebyshev(const EnsembleSpec& s, int N, const BigRat& x, const BigRat& y) {
  auto r = exact_sqrt(x * y);
  if (!r) throw MathError("k2_chebyshev: xy is not a rational square; use the real evaluation");
  // both roots give the same value; pick the positive one
  return k2_chebyshev<BigRat>(s, N, x, y, *r);
}

template <class F>
F hankel_inverse_gen(const EnsembleSpec& s, int N, const F& x, const F& y) {
  MomentTable<F> m(s, N);
  auto h = make_matrix<F>(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) h[j][k] = m.bi(j, k);
  auto inv = inverse(std::move(h));
  F r(0);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) r += ipow(x, j) * ipow(y, k) * inv[j][k];
  return r;
}

// (N-1)! sum_j (x ybar)^{j-N+1}/j!
template <class F>
F ginibre_kernel(int N, const F& x, const F& yb) {
  F r(0), xy = x * yb;
  for (int j = 0; j < N; ++j) r += ipow(xy, j - N + 1) / F(BigRat(factorial(j)));
  return F(BigRat(factorial(N - 1))) * r;
}

template <class F>
F ginibre_khat_schur(int N, const std::vector<F>& x, const std::vector<F>& yb) {
  const int n = static_cast<int>(x.size()), M = N - n;
  std::vector<F> xv = dual_vars(x), yv = dual_vars(yb);
  F r(0);
  for (const auto& l : enumerate_bounded(n, M)) {
    Partition lc = conjugate(l);
    r += schur_eval(l, xv) * schur_eval(l, yv) * F(schur_pair_avg_ginibre(lc, lc, M));
  }
  return r;
}

// (x - y)(N-1)! sum_{j<N} (xy)^j/j!
template <class F>
F real_ginibre_kernel(int N, const F& x, const F& y) {
  F r(0), xy = x * y;
  for (int j = 0; j < N; ++j) r += ipow(xy, j) / F(BigRat(factorial(j)));
  return (x - y) * F(BigRat(factorial(N - 1))) * r;
}

// (x - y) E[det(x - G) det(y - G)] over (N-1)x(N-1) matrices with iid N(0,1)
// entries, by expanding both determinants in the entries and applying
// Gaussian moments; independent of the closed form above.
BigRat real_ginibre_oracle(int N, const BigRat& x, const BigRat& y);

// Dotsenko-Fateev chiral kernel at gamma = 1 by the Schur route:
// sum over Y_{n,N-n} of s_lambda(x^vee) <s_lambda'>_JUE
template <class F>
F df_chiral_kernel(int N, const std::vector<F>& x, const BigRat& a, const BigRat& b) {
  const int n = static_cast<int>(x.size()), M = N - n;
  EnsembleSpec s = EnsembleSpec::jue(a, b);
  std::vector<F> xv = dual_vars(x);
  F r(0);
  for (const auto& l : enumerate_bounded(n, M)) r += schur_eval(l, xv) * schur_avg_closed<F>(s, conjugate(l), M);
  return r;
}

// n = 1 closed form, any gamma (|Delta|^{2 gamma} convention):
// sum_k (-z)^{-k} C(N-1,k) prod_{j<=k} (a+1+g(N-j-1))/(a+b+2+g(2N-j-3))
template <class F>
F df_chiral_kernel_n1(int N, const F& z, const F& a, const F& b, const F& g) {
  F r(0), prod(1);
  for (int k = 0; k < N; ++k) {
    if (k > 0) {
      F den = a + b + F(2) + g * F(2 * N - k - 3);
      if (is_zero(den)) throw MathError("df_chiral_kernel_n1: pole");
      prod *= (a + F(1) + g * F(N - k - 1)) / den;
    }
    r += ipow(F(-1) / z, k) * F(BigRat(binomial(N - 1, k))) * prod;
  }
  return r;
}

// gamma = 1: sum_k h_k(-1/z) <e_k>_JUE with M = N-1
template <class F>
F df_chiral_kernel_elementary(int N, const F& z, const BigRat& a, const BigRat& b) {
  EnsembleSpec s = EnsembleSpec::jue(a, b);
  F r(0);
  for (int k = 0; k < N; ++k) {
    std::vector<int> ones(static_cast<std::size_t>(k), 1);
    r += complete_h(k, std::vector<F>{F(-1) / z}) * schur_avg_closed<F>(s, Partition(ones), N - 1);
  }
  return r;
}

template <class F>
F df_kernel_factorized(int N, const std::vector<F>& x, const std::vector<F>& yb, const BigRat& a, const BigRat& b) {
  return df_chiral_kernel(N, x, a, b) * df_chiral_kernel(N, yb, a, b);
}

// Double expansion with <s_l' sbar_m'>_DF = <s_l'>_JUE <s_m'>_JUE, averages from the oracle.
template <class F>
F df_khat_double(int N, const std::vector<F>& x, const std::vector<F>& yb, const BigRat& a, const BigRat& b) {
  const int n = static_cast<int>(x.size()), M = N - n;
  MomentTable<F> m(EnsembleSpec::jue(a, b), M);
  auto ys = enumerate_bounded(n, M);
  std::vector<F> xv = dual_vars(x), yv = dual_vars(yb), avg;
  for (const auto& l : ys) avg.push_back(schur_avg_oracle(m, conjugate(l), M));
  F r(0);
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t k = 0; k < ys.size(); ++k)
      r += schur_eval(ys[i], xv) * schur_eval(ys[k], yv) * avg[i] * avg[k];
  return r;
}

struct SelbergDF {
  Real selberg, dotsenko_fateev;
};
// Selberg integral divided by M!, |Delta|^{2g} convention
Real selberg_partition(int M, const Real& a, const Real& b, const Real& g);
// Dotsenko-Fateev normalization; throws at sine poles
Real df_partition(int M, const Real& a, const Real& b, const Real& g);
SelbergDF selberg_and_df_partition(int M, const Real& a, const Real& b, const Real& g);

// khat_schur at permutations of t; true iff all equal the unpermuted value.
template <class F>
bool symmetry_check(const EnsembleSpec& s, int N, const std::vector<F>& x, const std::vector<F>& y, std::uint64_t seed,
                    int trials = 10) {
  const int n = static_cast<int>(x.size());
  auto table = expansion_table<F>(s, N, n);
  std::vector<F> t = t_vector(x, y);
  F base = khat_from_table(table, t);
  RationalSampler rng(seed);
  for (int i = 0; i < trials; ++i) {
    rng.shuffle(t);
    if (!(khat_from_table(table, t) == base)) return false;
  }
  return true;
}

template <class F>
bool symmetry_check_all(const EnsembleSpec& s, int N, const std::vector<F>& x, const std::vector<F>& y,
                        int* count = nullptr) {
  auto table = expansion_table<F>(s, N, static_cast<int>(x.size()));
  std::vector<F> t = t_vector(x, y);
  F base = khat_from_table(table, t);
  std::vector<int> idx(t.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  int c = 0;
  bool ok = true;
  do {
    std::vector<F> p;
    for (int i : idx) p.push_back(t[static_cast<std::size_t>(i)]);
    ok = ok && khat_from_table(table, p) == base;
    ++c;
  } while (std::next_permutation(idx.begin(), idx.end()));
  if (count) *count = c;
  return ok;
}

}  // namespace schurk
