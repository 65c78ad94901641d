#pragma once

#include "schurk/symfun.hpp"

namespace schurk {

struct HeatQuery {
  Real q, xi, eta;
  int terms = 0;  // 0: chosen from the tolerance
  HeatQuery(Real q_, Real xi_, Real eta_, int terms_ = 0);
};

// ceil(log(tol (1-q)^3) / log q)
int heat_auto_terms(const Real& q, const Real& tol = Real("1e-30"));
Real heat_kernel_sum(const HeatQuery& h);
Real heat_kernel_closed(const Real& q, const Real& xi, const Real& eta);

template <class F>
struct DoublingSums {
  std::vector<F> schur_terms, h_terms, chebyshev_terms;
  F schur_sum{0}, h_sum{0}, chebyshev_sum{0};
};

// sum_{j<J} q^j s_(k+j,k)(x,1/x) s_(k+j,k)(y,1/y), the h_j form, and the U_j form in xi = x + 1/x
template <class F>
DoublingSums<F> schur_doubling(const F& x, const F& y, const F& q, int J, int k = 0) {
  if (is_zero(x) || is_zero(y)) throw MathError("schur_doubling: x, y must be nonzero");
  if (J < 1 || k < 0) throw MathError("schur_doubling: J >= 1, k >= 0 required");
  DoublingSums<F> d;
  const std::vector<F> zx{x, F(1) / x}, zy{y, F(1) / y};
  const F wx = (x + F(1) / x) / F(2), wy = (y + F(1) / y) / F(2);
  F qj(1);
  for (int j = 0; j < J; ++j) {
    Partition l({k + j, k});
    F s = qj * schur_eval(l, zx) * schur_eval(l, zy);
    F h = qj * complete_h(j, zx) * complete_h(j, zy);
    F c = qj * chebyshev_u(j, wx) * chebyshev_u(j, wy);
    d.schur_terms.push_back(s);
    d.h_terms.push_back(h);
    d.chebyshev_terms.push_back(c);
    d.schur_sum += s;
    d.h_sum += h;
    d.chebyshev_sum += c;
    qj *= q;
  }
  return d;
}

// (Chebyshev-form sum, h-form sum) at k = 0
template <class F>
std::pair<F, F> schur_doubling_check(const F& x, const F& y, const F& q, int J) {
  auto d = schur_doubling(x, y, q, J, 0);
  return {d.chebyshev_sum, d.h_sum};
}

}  // namespace schurk
