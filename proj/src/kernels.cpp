#include "schurk/kernels.hpp"

#include <boost/math/constants/constants.hpp>
#include <map>
#include <numeric>

namespace schurk {

std::optional<BigRat> exact_sqrt(const BigRat& v) {
  if (v < 0) return std::nullopt;
  BigInt p = mp::numerator(v), q = mp::denominator(v);
  BigInt sp = mp::sqrt(p), sq = mp::sqrt(q);
  if (sp * sp != p || sq * sq != q) return std::nullopt;
  return BigRat(sp, sq);
}

namespace {

// Polynomial in the m*m matrix entries: exponent vector -> coefficient.
using Monomials = std::map<std::vector<int>, BigRat>;

// det(x I - G) expanded by the Leibniz formula with x substituted.
Monomials char_poly_entries(int m, const BigRat& x) {
  Monomials out;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inv;
    // each factor (x delta_{i,perm i} - G_{i,perm i}) contributes a choice
    Monomials terms{{std::vector<int>(static_cast<std::size_t>(m * m), 0), BigRat(inv % 2 ? -1 : 1)}};
    for (int i = 0; i < m; ++i) {
      Monomials next;
      for (const auto& [e, c] : terms) {
        if (perm[i] == i) next[e] += c * x;
        auto e2 = e;
        ++e2[static_cast<std::size_t>(i * m + perm[i])];
        next[e2] -= c;
      }
      terms = std::move(next);
    }
    for (const auto& [e, c] : terms) out[e] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

BigRat real_ginibre_oracle(int N, const BigRat& x, const BigRat& y) {
  const int m = N - 1;
  if (m < 0) throw MathError("real_ginibre_oracle: N >= 1 required");
  if (m > 4) throw MathError("real_ginibre_oracle: supported for N <= 5");
  Monomials a = char_poly_entries(m, x), b = char_poly_entries(m, y);
  BigRat e = 0;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      BigRat g = 1;
      for (std::size_t k = 0; k < ea.size() && g != 0; ++k) {
        int p = ea[k] + eb[k];
        g *= p % 2 ? BigRat(0) : BigRat(double_factorial(p - 1));
      }
      e += ca * cb * g;
    }
  return (x - y) * e;
}

Real selberg_partition(int M, const Real& a, const Real& b, const Real& g) {
  if (M < 1) throw MathError("selberg: M >= 1 required");
  if (g < 0) throw MathError("selberg: gamma must be nonnegative");
  Real z = 1;
  for (int j = 1; j <= M; ++j) {
    Real ga = a + 1 + g * (M - j), gb = b + 1 + g * (M - j), gd = a + b + 2 + g * (2 * M - j - 1);
    z *= gamma_real(ga) * gamma_real(gb) * gamma_real(1 + j * g) / (gamma_real(gd) * gamma_real(1 + g));
  }
  return z / to_real(BigRat(factorial(M)));
}

Real df_partition(int M, const Real& a, const Real& b, const Real& g) {
  const Real pi = boost::math::constants::pi<Real>(), tol("1e-30");
  Real z = selberg_partition(M, a, b, g), sines = 1;
  for (int j = 1; j <= M; ++j) {
    Real ga = a + 1 + g * (M - j), gb = b + 1 + g * (M - j), gd = a + b + 2 + g * (2 * M - j - 1);
    Real sd = sin(pi * gd), sg = sin(pi * g);
    if (abs(sd) < tol) throw MathError("Dotsenko-Fateev: sine pole (alpha + beta + 2 + gamma(2M-j-1) integer)");
    // sin(pi j g)/sin(pi g) -> U_{j-1}(cos pi g) at integer g
    Real ratio = abs(sg) < tol ? chebyshev_u(j - 1, Real(cos(pi * g))) : Real(sin(pi * j * g) / sg);
    sines *= sin(pi * ga) * sin(pi * gb) / sd * ratio;
  }
  return z * z * sines;
}

SelbergDF selberg_and_df_partition(int M, const Real& a, const Real& b, const Real& g) {
  return {selberg_partition(M, a, b, g), df_partition(M, a, b, g)};
}

}  // namespace schurk
