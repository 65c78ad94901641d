#include "schurk/arith.hpp"

#include <cstdlib>
#include <sstream>

namespace schurk {

namespace {
unsigned g_digits = 50;
}

void set_default_digits(unsigned digits) {
  if (digits < 10) throw MathError("precision must be at least 10 digits");
  g_digits = digits;
  Real::default_precision(digits);
}

unsigned default_digits() { return g_digits; }

unsigned env_default_digits() {
  if (const char* s = std::getenv("SCHURK_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 10) return static_cast<unsigned>(v);
  }
  return 50;
}

namespace {
// mpfr's own default is not what callers expect; apply ours before any Real is built
[[maybe_unused]] const bool g_digits_ready = (set_default_digits(env_default_digits()), true);
}

BigRat parse_rat(const std::string& s) {
  auto bad = [&] { return MathError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigRat p = parse_rat(s.substr(0, slash)), q = parse_rat(s.substr(slash + 1));
    if (!is_integer(p) || !is_integer(q) || q == 0) throw bad();
    return p / q;
  }
  // decimal literal such as -1.25 is read exactly
  std::string t = s;
  bool neg = false;
  if (t[0] == '-' || t[0] == '+') {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  auto dot = t.find('.');
  std::string digits = t, frac;
  if (dot != std::string::npos) {
    digits = t.substr(0, dot);
    frac = t.substr(dot + 1);
  }
  if (digits.empty() && frac.empty()) throw bad();
  for (char c : digits + frac)
    if (c < '0' || c > '9') throw bad();
  std::string all = digits + frac;
  std::size_t nz = all.find_first_not_of('0');
  BigInt num(nz == std::string::npos ? std::string("0") : all.substr(nz));
  BigInt den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  BigRat r(num, den);
  return neg ? BigRat(-r) : r;
}

std::string rat_str(const BigRat& r) {
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Real parse_real(const std::string& s) {
  if (s.find('/') != std::string::npos) return to_real(parse_rat(s));
  try {
    return Real(s);
  } catch (const std::runtime_error&) {
    throw MathError("not a decimal number: '" + s + "'");
  }
}

std::string real_str(const Real& r, int digits) {
  if (digits < 0) digits = static_cast<int>(default_digits());
  return r.str(digits, std::ios_base::scientific);
}

Real to_real(const BigRat& r) { return Real(mp::numerator(r)) / Real(mp::denominator(r)); }

bool is_integer(const BigRat& r) { return mp::denominator(r) == 1; }

long to_long(const BigRat& r) {
  if (!is_integer(r)) throw MathError("expected an integer, got " + rat_str(r));
  return mp::numerator(r).convert_to<long>();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  std::vector<BigRat> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<BigRat> q(a.degree() - db + 1, BigRat(0));
  const BigRat& lb = b.lead();
  for (int i = a.degree() - db; i >= 0; --i) {
    BigRat c = r[i + db] / lb;
    q[i] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly monic(const RatPoly& a) {
  if (a.is_zero()) return a;
  return (BigRat(1) / a.lead()) * a;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QRat::QRat(long offset, RatPoly num, RatPoly den) : off_(offset), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("QRat: zero denominator");
  normalize();
}

QRat QRat::u_pow(long e) {
  QRat r(1);
  r.off_ = e;
  return r;
}

void QRat::normalize() {
  if (num_.is_zero()) {
    off_ = 0;
    den_ = RatPoly(BigRat(1));
    return;
  }
  std::size_t vn = num_.valuation(), vd = den_.valuation();
  if (vn) num_ = num_.shift_down(vn);
  if (vd) den_ = den_.shift_down(vd);
  off_ += static_cast<long>(vn) - static_cast<long>(vd);
  if (den_.degree() > 0) {
    RatPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (den_.lead() != 1) {
    BigRat s = BigRat(1) / den_.lead();
    num_ = s * num_;
    den_ = s * den_;
  }
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long o = std::min(a.off_, b.off_);
  RatPoly an = a.num_.shift_up(static_cast<std::size_t>(a.off_ - o));
  RatPoly bn = b.num_.shift_up(static_cast<std::size_t>(b.off_ - o));
  if (a.den_ == b.den_) return QRat(o, an + bn, a.den_);
  return QRat(o, an * b.den_ + bn * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return QRat();
  if (a.is_laurent() && b.is_laurent()) {
    QRat r;
    r.off_ = a.off_ + b.off_;
    r.num_ = a.num_ * b.num_;
    r.den_ = RatPoly(BigRat(1));
    return r;
  }
  return QRat(a.off_ + b.off_, a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw MathError("QRat: division by zero");
  if (a.is_zero()) return QRat();
  if (b.num_.degree() == 0 && a.is_laurent() && b.is_laurent()) {
    QRat r;
    r.off_ = a.off_ - b.off_;
    r.num_ = (BigRat(1) / b.num_.lead()) * a.num_;
    r.den_ = RatPoly(BigRat(1));
    return r;
  }
  return QRat(a.off_ - b.off_, a.num_ * b.den_, a.den_ * b.num_);
}

QRat QRat::pow(long e) const { return ipow(*this, e); }

BigRat QRat::eval(const BigRat& u) const {
  BigRat d = den_.eval(u);
  if (d == 0) throw MathError("QRat: pole at evaluation point");
  if (u == 0 && off_ < 0) throw MathError("QRat: pole at u = 0");
  return num_.eval(u) / d * ipow(u, off_);
}

Real QRat::eval(const Real& u) const {
  Real d = den_.eval(u);
  if (d == 0) throw MathError("QRat: pole at evaluation point");
  return num_.eval(u) / d * ipow(u, off_);
}

namespace {
std::string poly_str(const RatPoly& p, long shift) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigRat& c = p.coeffs()[i];
    if (c == 0) continue;
    long e = static_cast<long>(i) + shift;
    BigRat a = c < 0 ? BigRat(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool unit = a == 1;
    if (!unit || e == 0) os << (is_integer(a) ? mp::numerator(a).str() : rat_str(a));
    if (e != 0) {
      if (!unit) os << "*";
      os << "u";
      if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
  }
  return os.str();
}
}  // namespace

std::string QRat::str() const {
  if (is_laurent()) {
    BigRat s = BigRat(1) / den_.lead();
    return poly_str(s * num_, off_);
  }
  return "(" + poly_str(num_, off_) + ")/(" + poly_str(den_, 0) + ")";
}

std::string scalar_str(const Scalar& s) {
  if (auto r = std::get_if<BigRat>(&s)) return rat_str(*r);
  if (auto q = std::get_if<QRat>(&s)) return q->str();
  return real_str(std::get<Real>(s));
}

Scalar det_exact(const Matrix<Scalar>& m) {
  if (m.empty()) return BigRat(1);
  std::size_t idx = m[0].empty() ? 0 : m[0][0].index();
  for (const auto& row : m) {
    if (row.size() != m.size()) throw MathError("det: matrix not square");
    for (const auto& x : row)
      if (x.index() != idx) throw MathError("det: mixed scalar fields");
  }
  auto run = [&](auto tag) -> Scalar {
    using F = decltype(tag);
    Matrix<F> a;
    for (const auto& row : m) {
      std::vector<F> r;
      for (const auto& x : row) r.push_back(std::get<F>(x));
      a.push_back(std::move(r));
    }
    return det(std::move(a));
  };
  if (idx == 0) return run(BigRat());
  if (idx == 1) return run(QRat());
  return run(Real());
}

}  // namespace schurk
