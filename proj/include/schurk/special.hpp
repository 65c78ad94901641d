#pragma once

#include "schurk/arith.hpp"

namespace schurk {

BigInt factorial(long n);
BigInt double_factorial(long n);  // n!! with (-1)!! = 0!! = 1
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n (n >= 0)
// Generalized binomial with rational top, integer bottom.
BigRat binomial_rat(const BigRat& top, long k);

// Rising factorial (a)_k
template <class F>
F pochhammer(const F& a, long k) {
  F r(1);
  for (long i = 0; i < k; ++i) r *= a + F(i);
  return r;
}

// G(n) = prod_{k=1}^{n-2} k!
BigInt barnes_g_int(long n);

Real gamma_real(const Real& z);
// Gamma of an exact argument: BigRat result for positive integers, error at poles.
BigRat gamma_int(long n);
Real qgamma_real(const Real& z, const Real& q);

QRat qnum_symmetric(long z);  // [z]_q
QRat qnum_floor(long z);      // (1 - q^z)/(1 - q)
Real qnum_floor_real(const Real& z, const Real& q);
Real qnum_symmetric_real(const Real& z, const Real& q);

}  // namespace schurk
