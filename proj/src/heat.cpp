#include "schurk/heat.hpp"

namespace schurk {

HeatQuery::HeatQuery(Real q_, Real xi_, Real eta_, int terms_)
    : q(std::move(q_)), xi(std::move(xi_)), eta(std::move(eta_)), terms(terms_) {
  if (!(q > 0 && q < 1)) throw MathError("heat kernel: q must lie in (0,1)");
  if (abs(xi) > 2 || abs(eta) > 2) throw MathError("heat kernel: |xi|, |eta| <= 2 required");
  if (terms < 0) throw MathError("heat kernel: terms must be nonnegative");
}

int heat_auto_terms(const Real& q, const Real& tol) {
  Real omq = 1 - q;
  Real j = ceil(log(tol * omq * omq * omq) / log(q));
  return std::max(1, static_cast<int>(j.convert_to<long>()));
}

Real heat_kernel_sum(const HeatQuery& h) {
  const int J = h.terms ? h.terms : heat_auto_terms(h.q);
  const Real a = h.xi / 2, b = h.eta / 2;
  // U_{j+1} = 2w U_j - U_{j-1}
  Real ua0 = 1, ua1 = h.xi, ub0 = 1, ub1 = h.eta, qj = 1, s = 0;
  for (int j = 0; j < J; ++j) {
    s += qj * ua0 * ub0;
    Real na = 2 * a * ua1 - ua0, nb = 2 * b * ub1 - ub0;
    ua0 = ua1;
    ua1 = na;
    ub0 = ub1;
    ub1 = nb;
    qj *= h.q;
  }
  return s;
}

Real heat_kernel_closed(const Real& q, const Real& xi, const Real& eta) {
  Real q2 = q * q, xe = xi * eta;
  Real den = 1 - q * xe + q2 * (xi * xi + eta * eta - 2) - q2 * q * xe + q2 * q2;
  if (den == 0) throw MathError("heat kernel: vanishing denominator");
  return (1 - q2) / den;
}

}  // namespace schurk
