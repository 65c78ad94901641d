#include "schurk/ensembles.hpp"

#include <algorithm>

namespace schurk {

std::string EnsembleSpec::name() const {
  switch (kind) {
    case Kind::GUE: return "gue";
    case Kind::LUE: return "lue(alpha=" + rat_str(alpha) + ")";
    case Kind::JUE: return "jue(alpha=" + rat_str(alpha) + ",beta=" + rat_str(beta) + ")";
    case Kind::JUEtilde: return "jue-tilde(alpha=" + rat_str(alpha) + ",beta=" + rat_str(beta) + ")";
    case Kind::LUEtilde: return "lue-tilde(alpha~=" + rat_str(alpha) + ")";
    case Kind::SW: return "sw";
    case Kind::qLUE: return "qlue(alpha=" + rat_str(alpha) + ")";
    case Kind::Ginibre: return "ginibre";
  }
  return "?";
}

EnsembleSpec make_ensemble(const std::string& name, const std::string& alpha, const std::string& beta,
                           const std::string& q) {
  EnsembleSpec s;
  if (name == "gue") s.kind = Kind::GUE;
  else if (name == "lue") s.kind = Kind::LUE;
  else if (name == "jue") s.kind = Kind::JUE;
  else if (name == "jue-tilde") s.kind = Kind::JUEtilde;
  else if (name == "lue-tilde") s.kind = Kind::LUEtilde;
  else if (name == "sw") s.kind = Kind::SW;
  else if (name == "qlue") s.kind = Kind::qLUE;
  else if (name == "ginibre") s.kind = Kind::Ginibre;
  else throw MathError("unknown ensemble '" + name + "'");
  s.alpha = parse_rat(alpha);
  s.beta = parse_rat(beta);
  s.q = parse_rat(q);
  if (s.kind == Kind::LUE && s.alpha <= -1) throw MathError("LUE requires alpha > -1");
  if ((s.kind == Kind::SW || s.kind == Kind::qLUE) && !(s.q > 0 && s.q < 1))
    throw MathError("q must lie in (0,1)");
  return s;
}

namespace {

void need_integer(const BigRat& x, const char* what) {
  if (!is_integer(x)) throw MathError(std::string(what) + " must be an integer here");
}

// -floor(-z)_q = (q^{-z} - 1)/(1 - q)
QRat neg_floor_neg(long z) { return -qnum_floor(-z); }

}  // namespace

template <>
BigRat moment<BigRat>(const EnsembleSpec& s, int p, int M) {
  if (p < 0) throw MathError("moment order must be nonnegative");
  switch (s.kind) {
    case Kind::GUE:
      return p % 2 ? BigRat(0) : BigRat(double_factorial(p - 1));
    case Kind::LUE:
      if (s.alpha <= -1) throw MathError("LUE requires alpha > -1");
      if (is_integer(s.alpha)) return BigRat(factorial(to_long(s.alpha) + p));
      return pochhammer(s.alpha + 1, p);  // normalized by Gamma(alpha+1)
    case Kind::JUE:
      if (s.alpha <= -1 || s.beta <= -1) throw MathError("JUE requires alpha, beta > -1");
      if (is_integer(s.alpha) && is_integer(s.beta)) {
        long a = to_long(s.alpha), b = to_long(s.beta);
        return BigRat(factorial(a + p) * factorial(b), factorial(a + b + p + 1));
      }
      return pochhammer(s.alpha + 1, p) / pochhammer(s.alpha + s.beta + 2, p);  // normalized by B(alpha+1,beta+1)
    case Kind::JUEtilde: {
      need_integer(s.alpha, "alpha");
      need_integer(s.beta, "beta");
      long a = to_long(s.alpha), b = to_long(s.beta);
      long g2 = M - p - a + b - 1;
      if (g2 <= 0 || a + p + 1 <= 0) throw MathError("JUEtilde moment diverges at p = " + std::to_string(p));
      return BigRat(factorial(p + a) * factorial(g2 - 1), factorial(M + b - 1));
    }
    case Kind::LUEtilde: {
      BigRat arg = s.alpha - p - 1;
      if (arg <= 0) throw MathError("LUEtilde moment diverges at p = " + std::to_string(p));
      if (is_integer(s.alpha)) return BigRat(factorial(to_long(arg) - 1));
      return BigRat(1) / pochhammer(arg, p);  // normalized by Gamma(alpha~-1)
    }
    case Kind::Ginibre:
      throw MathError("Ginibre has a bimoment, not a moment sequence");
    case Kind::SW:
    case Kind::qLUE:
      throw MathError("q-ensemble moments are not rational numbers; use QRat");
  }
  throw MathError("unreachable");
}

template <>
QRat moment<QRat>(const EnsembleSpec& s, int p, int M) {
  if (p < 0) throw MathError("moment order must be nonnegative");
  if (s.kind == Kind::SW) return QRat::u_pow(-static_cast<long>(p + 1) * (p + 1));
  if (s.kind == Kind::qLUE) {
    need_integer(s.alpha, "qLUE alpha (exact path)");
    long a = to_long(s.alpha);
    QRat r(1);
    for (int k = 1; k <= p; ++k) r *= neg_floor_neg(a + k);
    return r;
  }
  return QRat(moment<BigRat>(s, p, M));
}

template <>
Real moment<Real>(const EnsembleSpec& s, int p, int M) {
  if (p < 0) throw MathError("moment order must be nonnegative");
  const Real a = to_real(s.alpha), b = to_real(s.beta), q = to_real(s.q);
  switch (s.kind) {
    case Kind::GUE:
      return p % 2 ? Real(0) : Real(double_factorial(p - 1));
    case Kind::LUE:
      return gamma_real(1 + a + p);
    case Kind::JUE:
      return gamma_real(p + a + 1) * gamma_real(b + 1) / gamma_real(p + a + b + 2);
    case Kind::JUEtilde:
      return gamma_real(p + a + 1) * gamma_real(M - p - a + b - 1) / gamma_real(M + b);
    case Kind::LUEtilde:
      if (a - p - 1 <= 0) throw MathError("LUEtilde moment diverges");
      return gamma_real(a - p - 1);
    case Kind::SW:
      return pow(q, -Real(p + 1) * (p + 1) / 2);
    case Kind::qLUE:
      if (is_integer(s.alpha)) {
        Real r = 1;
        for (int k = 1; k <= p; ++k) r *= -qnum_floor_real(-(a + k), q);
        return r;
      }
      return gamma_real(-p - a) * gamma_real(p + a + 1) / qgamma_real(-p - a, q);
    case Kind::Ginibre:
      throw MathError("Ginibre has a bimoment, not a moment sequence");
  }
  throw MathError("unreachable");
}

BigRat schur_avg_gue(const Partition& mu, int M) {
  if (mu.length() > M) throw MathError("GUE: l(mu) > M");
  if (mu.size() % 2) return 0;
  int L = mu.length() + (mu.length() % 2);
  std::vector<long> odd, even;
  for (int j = 1; j <= L; ++j) {
    long l = mu[j - 1] + L - j;
    (l % 2 ? odd : even).push_back(l);
  }
  if (odd.size() != even.size()) return 0;
  BigRat r = 1;
  for (long f : odd) r *= BigRat(double_factorial(f));
  for (long e : even) r *= BigRat(double_factorial(e - 1));
  for (long f : odd)
    for (long e : even) r /= BigRat(f - e);
  long k = static_cast<long>(L) * (L - 2) / 8;
  if (k % 2) r = -r;
  return r * schur_principal(mu, M);
}

BigRat schur_avg_lue(const Partition& mu, int M, const BigRat& alpha) {
  if (mu.length() > M) throw MathError("LUE: l(mu) > M");
  BigRat r = schur_principal(mu, M);
  for (int j = 1; j <= M; ++j) r *= pochhammer(alpha + M + 1 - j, mu[j - 1]);
  return r;
}

Real schur_avg_lue_real(const Partition& mu, int M, const Real& alpha) {
  if (mu.length() > M) throw MathError("LUE: l(mu) > M");
  Real r = to_real(schur_principal(mu, M));
  for (int j = 1; j <= M; ++j) r *= gamma_real(alpha + mu[j - 1] + M + 1 - j) / gamma_real(alpha + M + 1 - j);
  return r;
}

BigRat lue_alpha_shift_form(const Partition& mu, int M, int alpha) {
  if (alpha < 0) throw MathError("alpha shift requires alpha >= 0");
  std::vector<int> shifted = mu.padded(M);
  for (int& x : shifted) x += alpha;
  BigRat c = 1;
  for (int j = 1; j <= M; ++j) c *= BigRat(factorial(M - j), factorial(alpha + M - j));
  return c * schur_avg_lue(Partition(shifted), M, 0);
}

BigRat lue_dimension_form(const Partition& mu, int M, int alpha) {
  BigRat r = schur_principal(mu, M + alpha);
  for (int j = 1; j <= M; ++j) r *= BigRat(factorial(mu[j - 1] - j + M), factorial(M - j));
  return r;
}

BigRat schur_avg_jue(const Partition& mu, int M, const BigRat& alpha, const BigRat& beta) {
  if (mu.length() > M) throw MathError("JUE: l(mu) > M");
  if (is_integer(alpha) && is_integer(beta) && alpha >= 0 && beta >= 0) {
    long a = to_long(alpha), b = to_long(beta);
    return schur_principal(mu, M) * schur_principal(mu, static_cast<int>(a) + M) /
           schur_principal(mu, static_cast<int>(a + b) + 2 * M);
  }
  BigRat r = schur_principal(mu, M);
  for (int j = 1; j <= M; ++j)
    r *= pochhammer(alpha + M + 1 - j, mu[j - 1]) / pochhammer(alpha + beta + 2 * M + 1 - j, mu[j - 1]);
  return r;
}

Real schur_avg_jue_real(const Partition& mu, int M, const Real& a, const Real& b) {
  if (mu.length() > M) throw MathError("JUE: l(mu) > M");
  Real r = to_real(schur_principal(mu, M));
  for (int j = 1; j <= M; ++j) {
    int m = mu[j - 1];
    r *= gamma_real(m - j + a + M + 1) * gamma_real(a + b + 2 * M + 1 - j) /
         (gamma_real(m - j + a + b + 2 * M + 1) * gamma_real(a + M + 1 - j));
  }
  return r;
}

BigRat schur_avg_jue_tilde(const Partition& mu, int M, int alpha, int beta) {
  if (mu.length() > M) throw MathError("JUEtilde: l(mu) > M");
  int bt = beta - alpha - M;
  if (alpha < 0 || bt < 0) throw MathError("JUEtilde requires alpha >= 0 and beta - alpha - M >= 0");
  if (mu[0] > bt) throw MathError("JUEtilde: mu_1 exceeds beta - alpha - M (zero dimension)");
  return schur_principal(mu, M) * schur_principal(mu, alpha + M) / schur_principal(conjugate(mu), bt);
}

BigRat schur_avg_lue_tilde(const Partition& lp, int M, const BigRat& alpha_tilde) {
  if (lp.length() > M) throw MathError("LUEtilde: l(lambda') > M");
  const int ell = lp[0];
  const BigRat a = alpha_tilde - 2 * M;
  if (a - ell <= -1) throw MathError("LUEtilde: integral diverges (alpha~ - 2M must exceed l(lambda) - 1)");
  std::vector<int> star(static_cast<std::size_t>(M));
  for (int j = 1; j <= M; ++j) star[static_cast<std::size_t>(j - 1)] = ell - lp[M - j];
  BigRat r = schur_avg_lue(Partition(star), M, a - ell);
  // Z_M(a - ell)/Z_M(a) = prod_j Gamma(a - ell + j)/Gamma(a + j)
  for (int j = 1; j <= M; ++j) r /= pochhammer(a - ell + j, ell);
  return r;
}

QRat schur_avg_sw(const Partition& mu, int M) {
  if (mu.length() > M) throw MathError("SW: l(mu) > M");
  long e = 0;
  for (int j = 1; j <= M; ++j) e += static_cast<long>(mu[j - 1]) * (mu[j - 1] + 3 * M + 1 - 2 * j);
  return QRat::u_pow(-e) * qdim(mu, M);
}

QRat schur_avg_qlue(const Partition& mu, int M, int alpha) {
  if (mu.length() > M) throw MathError("qLUE: l(mu) > M");
  QRat r = QRat::u_pow(-static_cast<long>(M - 1) * mu.size()) * qdim(mu, M);
  for (int j = 1; j <= M; ++j) {
    long A = alpha + 1 + mu[j - 1] + M - j, B = alpha + j;
    QRat f(1);
    if (A > B)
      for (long i = 0; i < A - B; ++i) f *= qnum_floor(1 - A + i);
    else
      for (long i = 0; i < B - A; ++i) f /= qnum_floor(1 - B + i);
    if ((A - B) % 2) f = -f;
    r *= f;
  }
  return r;
}

Real schur_avg_qlue_real(const Partition& mu, int M, const Real& a, const Real& q) {
  if (mu.length() > M) throw MathError("qLUE: l(mu) > M");
  Real r = pow(q, -Real(mu.size()) * (M - 1) / 2) * qdim(mu, M).eval(Real(sqrt(q)));
  for (int j = 1; j <= M; ++j) {
    int m = mu[j - 1];
    r *= gamma_real(a + 1 + m + M - j) * gamma_real(-a - m - M + j) / (gamma_real(a + j) * gamma_real(-a - j + 1));
    r *= qgamma_real(-a - j + 1, q) / qgamma_real(-a - m - M + j, q);
  }
  return r;
}

BigRat schur_pair_avg_ginibre(const Partition& lp, const Partition& mp, int M) {
  if (lp.length() > M || mp.length() > M) throw MathError("Ginibre: partition longer than M");
  if (lp != mp) return 0;
  BigRat r = 1;
  for (int j = 1; j <= M; ++j) r *= BigRat(factorial(M - j + lp[j - 1]), factorial(M - j));
  return r;
}

AskeyPair askey_limit_check(const Partition& mu, int M, const Real& alpha, const Real& q) {
  if (abs(alpha - round(alpha)) < Real("1e-30"))
    throw MathError("askey_limit_check requires non-integer alpha");
  Real lue = schur_avg_qlue_real(mu, M, alpha, q);
  Real sw = qdim(mu, M).eval(Real(sqrt(q)));
  long e = 0;
  for (int j = 1; j <= M; ++j) e += static_cast<long>(mu[j - 1]) * (mu[j - 1] + 3 * M + 1 - 2 * j);
  sw *= pow(q, -Real(e) / 2);
  const int s = mu.size();
  AskeyPair p;
  p.qlue_side = pow(1 - q, s) * lue;
  p.sw_side = pow(q, (Real(1) / 2 - alpha) * s) * sw;
  p.naive_ratio = lue / (pow(q, (1 - alpha) * s) * sw);
  if (!isfinite(p.qlue_side) || !isfinite(p.sw_side) || p.sw_side == 0)
    throw MathError("askey_limit_check: precision exhausted");
  return p;
}

BigRat schur_avg_exact(const EnsembleSpec& s, const Partition& mu, int M) {
  switch (s.kind) {
    case Kind::GUE: return schur_avg_gue(mu, M);
    case Kind::LUE: return schur_avg_lue(mu, M, s.alpha);
    case Kind::JUE: return schur_avg_jue(mu, M, s.alpha, s.beta);
    case Kind::JUEtilde: return schur_avg_jue_tilde(mu, M, static_cast<int>(to_long(s.alpha)), static_cast<int>(to_long(s.beta)));
    case Kind::LUEtilde: return schur_avg_lue_tilde(mu, M, s.alpha);
    default: return schur_avg_oracle<BigRat>(s, mu, M);
  }
}

}  // namespace schurk
