#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "schurk/arith.hpp"
#include "schurk/partitions.hpp"
#include "schurk/special.hpp"
#include "schurk/symfun.hpp"

namespace schurk {

enum class Kind { GUE, LUE, JUE, JUEtilde, LUEtilde, SW, qLUE, Ginibre };

// Parameters are exact rationals; decimal input such as 0.7 is read exactly.
// For LUEtilde, alpha holds alpha~. q is used only by Real evaluations of
// the q-ensembles (exact paths work in u = q^(1/2) symbolically).
struct EnsembleSpec {
  Kind kind = Kind::GUE;
  BigRat alpha = 0, beta = 0;
  BigRat q = BigRat(1, 2);

  static EnsembleSpec gue() { return {Kind::GUE}; }
  static EnsembleSpec lue(BigRat a) { return {Kind::LUE, a}; }
  static EnsembleSpec jue(BigRat a, BigRat b) { return {Kind::JUE, a, b}; }
  static EnsembleSpec jue_tilde(BigRat a, BigRat b) { return {Kind::JUEtilde, a, b}; }
  static EnsembleSpec lue_tilde(BigRat at) { return {Kind::LUEtilde, at}; }
  static EnsembleSpec sw(BigRat q = BigRat(1, 2)) { return {Kind::SW, 0, 0, q}; }
  static EnsembleSpec qlue(BigRat a, BigRat q = BigRat(1, 2)) { return {Kind::qLUE, a, 0, q}; }
  static EnsembleSpec ginibre() { return {Kind::Ginibre}; }

  std::string name() const;
};

EnsembleSpec make_ensemble(const std::string& name, const std::string& alpha, const std::string& beta,
                           const std::string& q);

// Moment m_p of the weight. M is the number of variables, used only by
// JUEtilde whose weight exponent depends on it.
template <class F>
F moment(const EnsembleSpec& s, int p, int M = 0);
template <>
BigRat moment<BigRat>(const EnsembleSpec& s, int p, int M);
template <>
QRat moment<QRat>(const EnsembleSpec& s, int p, int M);
template <>
Real moment<Real>(const EnsembleSpec& s, int p, int M);

// Pairing <z^a, z^b>: m_{a+b} on the line, delta_ab a! for Ginibre.
template <class F>
F bimoment(const EnsembleSpec& s, int a, int b, int M = 0) {
  if (s.kind == Kind::Ginibre) return a == b ? F(BigRat(factorial(a))) : F(0);
  return moment<F>(s, a + b, M);
}

template <class F>
class MomentTable {
 public:
  MomentTable(EnsembleSpec s, int M = 0) : spec_(std::move(s)), M_(M) {}
  const EnsembleSpec& spec() const { return spec_; }
  F operator()(int p) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(cache_.size()) <= p) cache_.push_back(moment<F>(spec_, static_cast<int>(cache_.size()), M_));
    return cache_[static_cast<std::size_t>(p)];
  }
  F bi(int a, int b) const {
    if (spec_.kind == Kind::Ginibre) return bimoment<F>(spec_, a, b, M_);
    return (*this)(a + b);
  }

 private:
  EnsembleSpec spec_;
  int M_;
  mutable std::mutex mu_;
  mutable std::vector<F> cache_;
};

template <class F>
F hankel_det(const EnsembleSpec& s, int M) {
  MomentTable<F> m(s, M);
  auto a = make_matrix<F>(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j)
    for (int k = 0; k < M; ++k) a[j][k] = m.bi(j, k);
  return det(std::move(a));
}

template <class F>
F partition_function(const EnsembleSpec& s, int M) {
  return hankel_det<F>(s, M);
}

template <class F>
struct OrthoSystem {
  std::vector<Poly<F>> P;  // monic, P[j] of degree j
  std::vector<F> h;        // norms
};

template <class F>
OrthoSystem<F> ortho_system(const EnsembleSpec& s, int K, int M = 0) {
  MomentTable<F> m(s, M);
  auto pair = [&](const Poly<F>& a, const Poly<F>& b) {
    F r(0);
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j) r += a.coeff(i) * b.coeff(j) * m.bi(i, j);
    return r;
  };
  OrthoSystem<F> os;
  for (int k = 0; k <= K; ++k) {
    Poly<F> p = Poly<F>::monomial(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) p -= (pair(Poly<F>::monomial(static_cast<std::size_t>(k)), os.P[j]) / os.h[j]) * os.P[j];
    F h = pair(p, p);
    if (is_zero(h)) throw MathError("ortho_system: zero norm at degree " + std::to_string(k));
    os.P.push_back(std::move(p));
    os.h.push_back(std::move(h));
  }
  return os;
}

// <s_l s_m> = det[<z^{l_j+M-j}, z^{m_k+M-k}>] / det[<z^{M-j}, z^{M-k}>]
template <class F>
F pair_avg_oracle(const MomentTable<F>& m, const Partition& l, const Partition& mu, int M) {
  if (l.length() > M || mu.length() > M) throw MathError("pair_avg_oracle: partition longer than M");
  auto num = make_matrix<F>(static_cast<std::size_t>(M), static_cast<std::size_t>(M)), den = num;
  for (int j = 0; j < M; ++j)
    for (int k = 0; k < M; ++k) {
      num[j][k] = m.bi(l[j] + M - 1 - j, mu[k] + M - 1 - k);
      den[j][k] = m.bi(M - 1 - j, M - 1 - k);
    }
  F d = det(std::move(den));
  if (is_zero(d)) throw MathError("oracle: singular moment determinant");
  return det(std::move(num)) / d;
}

template <class F>
F pair_avg_oracle(const EnsembleSpec& s, const Partition& l, const Partition& mu, int M) {
  return pair_avg_oracle(MomentTable<F>(s, M), l, mu, M);
}

template <class F>
F schur_avg_oracle(const MomentTable<F>& m, const Partition& mu, int M) {
  return pair_avg_oracle(m, mu, Partition(), M);
}

template <class F>
F schur_avg_oracle(const EnsembleSpec& s, const Partition& mu, int M) {
  return schur_avg_oracle(MomentTable<F>(s, M), mu, M);
}

// Closed-form averages.
BigRat schur_avg_gue(const Partition& mu, int M);
BigRat schur_avg_lue(const Partition& mu, int M, const BigRat& alpha);
Real schur_avg_lue_real(const Partition& mu, int M, const Real& alpha);
// alpha in N0: shift to alpha = 0 with coefficient prod_j Gamma(M+1-j)/Gamma(alpha+M+1-j)
BigRat lue_alpha_shift_form(const Partition& mu, int M, int alpha);
// alpha in N0: s_mu(1^{M+alpha}) prod_j Gamma(mu_j-j+M+1)/Gamma(M+1-j)
BigRat lue_dimension_form(const Partition& mu, int M, int alpha);
BigRat schur_avg_jue(const Partition& mu, int M, const BigRat& alpha, const BigRat& beta);
Real schur_avg_jue_real(const Partition& mu, int M, const Real& alpha, const Real& beta);
BigRat schur_avg_jue_tilde(const Partition& mu, int M, int alpha, int beta);
BigRat schur_avg_lue_tilde(const Partition& lp, int M, const BigRat& alpha_tilde);
QRat schur_avg_sw(const Partition& mu, int M);
QRat schur_avg_qlue(const Partition& mu, int M, int alpha);
Real schur_avg_qlue_real(const Partition& mu, int M, const Real& alpha, const Real& q);
BigRat schur_pair_avg_ginibre(const Partition& lp, const Partition& mp, int M);

// Kadell's Jack average in the Jacobi ensemble with |Delta|^{2 gamma}.
template <class F>
F jack_avg_jacobi_coeff(const Partition& lp, int M, const F& a, const F& b, const F& g, int n = -1) {
  const Partition lam = conjugate(lp);
  if (lp.length() > M) throw MathError("kadell: l(lambda') > M");
  if (n >= 0 && lam.length() > 2 * n) throw MathError("kadell: lambda outside Y_{2n,M}");
  const int L = lp.length();
  F r(1);
  auto poch = [](const F& x, int k) {
    F v = pochhammer(x, k);
    if (is_zero(v)) throw MathError("kadell: singular Pochhammer");
    return v;
  };
  for (int j = 1; j <= L; ++j)
    r *= pochhammer(a + F(1) + g * F(M - j), lp[j - 1]) / poch(a + b + F(2) + g * F(2 * M - j - 1), lp[j - 1]);
  for (int j = 1; j <= L; ++j)
    for (int k = j + 1; k <= L; ++k) {
      int d = lp[j - 1] - lp[k - 1];
      r *= pochhammer(g * F(k - j + 1), d) / poch(g * F(k - j), d);
    }
  for (int j = 1; j <= L; ++j) r *= pochhammer(g * F(M - j + 1), lp[j - 1]) / poch(g * F(L - j + 1), lp[j - 1]);
  return r;
}

struct AskeyPair {
  Real qlue_side;  // (1-q)^{|mu|} <s_mu>_qLUE
  Real sw_side;    // q^{(1/2-alpha)|mu|} <s_mu>_SW
  Real naive_ratio;  // <s_mu>_qLUE / (q^{(1-alpha)|mu|} <s_mu>_SW)
  Real ratio() const { return qlue_side / sw_side; }
};
AskeyPair askey_limit_check(const Partition& mu, int M, const Real& alpha, const Real& q);

// Exact average by the closed form for the ensemble, or the oracle for
// ensembles without one.
BigRat schur_avg_exact(const EnsembleSpec& s, const Partition& mu, int M);

}  // namespace schurk
