#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace schurk {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using BigRat = mp::number<mp::gmp_rational, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Working precision for Real, in decimal digits.
void set_default_digits(unsigned digits);
unsigned default_digits();
// Default precision from SCHURK_PRECISION if set, else 50.
unsigned env_default_digits();

BigRat parse_rat(const std::string& s);
std::string rat_str(const BigRat& r);  // always "p/q"
Real parse_real(const std::string& s);
std::string real_str(const Real& r, int digits = -1);
Real to_real(const BigRat& r);
bool is_integer(const BigRat& r);
long to_long(const BigRat& r);

// Dense univariate polynomial, coefficient i multiplies x^i.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Poly(const T& constant) : c_{constant} { trim(); }

  static Poly monomial(std::size_t k, const T& coef = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = coef;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const { return c_.back(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = s * x;
    return Poly(std::move(c));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
  }
  // p(-x)
  Poly reflect() const {
    std::vector<T> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Poly(std::move(c));
  }
  template <class S>
  S eval(const S& x) const {
    S r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + S(c_[i]);
    return r;
  }
  // lowest index with nonzero coefficient
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && c_[v] == T(0)) ++v;
    return v;
  }
  Poly shift_down(std::size_t k) const {
    if (k >= c_.size()) return Poly();
    return Poly(std::vector<T>(c_.begin() + static_cast<long>(k), c_.end()));
  }
  Poly shift_up(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<T> c(k, T(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }

 private:
  std::vector<T> c_;
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
};

using RatPoly = Poly<BigRat>;

// Euclidean division over a field.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& a);
RatPoly gcd(RatPoly a, RatPoly b);

// Laurent rational function in u = q^(1/2):  u^offset * num(u)/den(u)
// with u not dividing num or den, gcd(num,den) = 1 and den monic.
class QRat {
 public:
  QRat() : den_(BigRat(1)) {}
  QRat(long v) : QRat(BigRat(v)) {}
  QRat(const BigRat& v) : num_(v), den_(BigRat(1)) {}
  QRat(long offset, RatPoly num, RatPoly den);

  static QRat u_pow(long e);
  // q = u^2
  static QRat q_pow(long e) { return u_pow(2 * e); }

  long offset() const { return off_; }
  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.degree() == 0; }

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& b) { return *this = *this + b; }
  QRat& operator-=(const QRat& b) { return *this = *this - b; }
  QRat& operator*=(const QRat& b) { return *this = *this * b; }
  QRat& operator/=(const QRat& b) { return *this = *this / b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.off_ == b.off_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  QRat pow(long e) const;
  BigRat eval(const BigRat& u) const;
  Real eval(const Real& u) const;
  std::string str() const;

 private:
  long off_ = 0;
  RatPoly num_, den_;
  void normalize();
};

// Runtime-tagged scalar for the CLI and bindings.
using Scalar = std::variant<BigRat, QRat, Real>;
std::string scalar_str(const Scalar& s);

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct field_traits {
  static constexpr bool exact = true;
};
template <>
struct field_traits<Real> {
  static constexpr bool exact = false;
};

inline bool is_zero(const BigRat& x) { return x == 0; }
inline bool is_zero(const QRat& x) { return x.is_zero(); }
inline bool is_zero(const Real& x) { return x == 0; }

template <class F>
Matrix<F> make_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<F>(rows, std::vector<F>(cols, F(0)));
}

template <class F>
Matrix<F> identity_matrix(std::size_t n) {
  auto m = make_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  auto c = make_matrix<F>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

// Bareiss fraction-free elimination for exact fields, partial pivoting for Real.
template <class F>
F det(Matrix<F> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw MathError("det: matrix not square");
  if (n == 0) return F(1);
  if constexpr (field_traits<F>::exact) {
    F sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (is_zero(a[k][k])) {
        std::size_t p = k + 1;
        while (p < n && is_zero(a[p][k])) ++p;
        if (p == n) return F(0);
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j)
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        a[i][k] = F(0);
      }
      prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  } else {
    F d(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (abs(a[i][k]) > abs(a[p][k])) p = i;
      if (is_zero(a[p][k])) return F(0);
      if (p != k) {
        std::swap(a[k], a[p]);
        d = -d;
      }
      d *= a[k][k];
      for (std::size_t i = k + 1; i < n; ++i) {
        F f = a[i][k] / a[k][k];
        for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      }
    }
    return d;
  }
}

// Gauss-Jordan inverse; throws on singular input.
template <class F>
Matrix<F> inverse(Matrix<F> a) {
  const std::size_t n = a.size();
  auto inv = identity_matrix<F>(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    if constexpr (field_traits<F>::exact) {
      while (p < n && is_zero(a[p][k])) ++p;
    } else {
      for (std::size_t i = k + 1; i < n; ++i)
        if (abs(a[i][k]) > abs(a[p][k])) p = i;
    }
    if (p == n || is_zero(a[p][k])) throw MathError("inverse: singular matrix");
    std::swap(a[k], a[p]);
    std::swap(inv[k], inv[p]);
    F piv = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= piv;
      inv[k][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(a[i][k])) continue;
      F f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

// Runtime-dispatched determinant; all entries must share one field.
Scalar det_exact(const Matrix<Scalar>& m);

// Cofactor expansion, for cross-checks on small matrices.
template <class F>
F det_cofactor(const Matrix<F>& a) {
  const std::size_t n = a.size();
  if (n == 0) return F(1);
  if (n == 1) return a[0][0];
  F r(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<F> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<F> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    F t = a[0][j] * det_cofactor(minor);
    r = (j % 2) ? r - t : r + t;
  }
  return r;
}

template <class F>
F ipow(const F& x, long e) {
  if (e < 0) return F(1) / ipow(x, -e);
  F r(1), b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace schurk
