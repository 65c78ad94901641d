#include "schurk/special.hpp"

#include <cmath>

namespace schurk {

BigInt factorial(long n) {
  if (n < 0) throw MathError("factorial of negative integer");
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt double_factorial(long n) {
  if (n < -1) throw MathError("double factorial below -1");
  BigInt r = 1;
  for (long i = n; i > 1; i -= 2) r *= i;
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw MathError("binomial with negative top");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigRat binomial_rat(const BigRat& top, long k) {
  if (k < 0) return 0;
  BigRat r = 1;
  for (long i = 0; i < k; ++i) r = r * (top - i) / (i + 1);
  return r;
}

BigInt barnes_g_int(long n) {
  if (n <= 0) throw MathError("barnes_g_int requires n >= 1");
  BigInt r = 1, f = 1;
  for (long k = 1; k <= n - 2; ++k) {
    f *= k;
    r *= f;
  }
  return r;
}

BigRat gamma_int(long n) {
  if (n <= 0) throw MathError("Gamma pole at nonpositive integer");
  return BigRat(factorial(n - 1));
}

Real gamma_real(const Real& z) {
  Real tol = pow(Real(10), -static_cast<long>(default_digits()) + 5);
  if (z <= 0) {
    Real r = round(z);
    if (abs(z - r) < tol) throw MathError("Gamma pole near " + real_str(z, 10));
  }
  return tgamma(z);
}

Real qgamma_real(const Real& z, const Real& q) {
  if (!(q > 0 && q < 1)) throw MathError("q-Gamma requires 0 < q < 1");
  Real eps = pow(Real(10), -static_cast<long>(default_digits()) - 5);
  Real prod = 1;
  Real qk = 1;  // q^k
  Real qz = pow(q, z);
  for (long k = 0;; ++k) {
    Real d = 1 - qk * qz;
    if (abs(d) < eps) throw MathError("q-Gamma pole near " + real_str(z, 10));
    Real f = (1 - qk * q) / d;
    prod *= f;
    if (abs(f - 1) < eps && abs(qk * qz) < eps) break;
    qk *= q;
    if (k > 100000000) throw MathError("q-Gamma product did not converge");
  }
  return pow(1 - q, 1 - z) * prod;
}

QRat qnum_symmetric(long z) {
  // (u^-z - u^z)/(u^-1 - u) = sum_{i=0}^{|z|-1} u^{-(|z|-1)+2i}, odd in z
  if (z == 0) return QRat();
  long a = std::labs(z);
  std::vector<BigRat> c(static_cast<std::size_t>(2 * a - 1), BigRat(0));
  for (long i = 0; i < a; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
  QRat r(-(a - 1), RatPoly(std::move(c)), RatPoly(BigRat(1)));
  return z > 0 ? r : -r;
}

QRat qnum_floor(long z) {
  // (1 - u^{2z})/(1 - u^2)
  if (z == 0) return QRat();
  long a = std::labs(z);
  std::vector<BigRat> c(static_cast<std::size_t>(2 * a - 1), BigRat(0));
  for (long i = 0; i < a; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
  QRat s(0, RatPoly(std::move(c)), RatPoly(BigRat(1)));  // 1 + q + ... + q^{a-1}
  if (z > 0) return s;
  // (1 - q^{-a})/(1 - q) = -q^{-a}(1 - q^a)/(1 - q)
  return -(QRat::q_pow(-a) * s);
}

Real qnum_floor_real(const Real& z, const Real& q) { return (1 - pow(q, z)) / (1 - q); }

Real qnum_symmetric_real(const Real& z, const Real& q) {
  Real h = sqrt(q);
  return (pow(h, -z) - pow(h, z)) / (1 / h - h);
}

}  // namespace schurk
