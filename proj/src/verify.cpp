#include "schurk/verify.hpp"

#include <boost/math/constants/constants.hpp>
#include <chrono>
#include <functional>
#include <future>
#include <mutex>
#include <sstream>

#include "schurk/heat.hpp"
#include "schurk/kernels.hpp"
#include "schurk/painleve.hpp"
#include "schurk/toeplitz.hpp"

namespace schurk {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) fail(what);
  }

  // runs f, counting an exception as a failed check
  template <class Fn>
  void guard(const std::string& what, Fn&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++r_.checks;
      fail(what + ": " + e.what());
    }
  }

  SuiteResult& result() { return r_; }

 private:
  SuiteResult& r_;
  void fail(const std::string& what) {
    ++r_.failures;
    if (r_.messages.size() < 10) r_.messages.push_back(what);
  }
};

Real rel_diff(const Real& a, const Real& b) {
  Real m = std::max(abs(a), abs(b));
  return m == 0 ? Real(0) : Real(abs(a - b) / m);
}

std::string pstr(const Partition& p) { return "(" + p.str() + ")"; }

template <class T>
std::string vstr(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rat_str(v[i]);
  return s + "]";
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- modules

void suite_core_arith(Checker& c, RationalSampler& rng) {
  for (int t = 0; t < 30; ++t) {
    auto m = make_matrix<BigRat>(4, 4);
    Matrix<Scalar> ms(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        m[i][j] = (t % 3 == 0 && i == j) ? BigRat(0) : rng.next();
        ms[i][j] = m[i][j];
      }
    BigRat d = det(m);
    c.check(d == det_cofactor(m), "Bareiss vs cofactor, trial " + std::to_string(t));
    c.check(std::get<BigRat>(det_exact(ms)) == d, "det_exact vs det, trial " + std::to_string(t));
    if (d != 0) c.check(matmul(m, inverse(m)) == identity_matrix<BigRat>(4), "inverse, trial " + std::to_string(t));
  }
  for (int t = 0; t < 20; ++t) {
    QRat a = QRat::u_pow(t % 5 - 2) * (QRat(rng.next()) + QRat(rng.next()) * QRat::q_pow(1 + t % 3));
    QRat b = QRat(rng.next()) - QRat::u_pow(t % 4 + 1) / (QRat(1) - QRat::q_pow(2));
    if (a.is_zero() || b.is_zero()) continue;
    c.check((a / b) * (b / a) == QRat(1), "QRat (a/b)(b/a) = 1");
    c.check((a + b) - b == a, "QRat (a+b)-b = a");
  }
  c.check((QRat(1) - QRat::q_pow(2)) / (QRat(1) - QRat::q_pow(1)) == QRat(1) + QRat::q_pow(1),
          "QRat canonical form (1-q^2)/(1-q)");
  const Real tol = pow(Real(10), -static_cast<int>(default_digits()) + 5);
  for (int i = 0; i <= 10; ++i) {
    Real z = Real(i) + Real("0.1");
    c.check(rel_diff(gamma_real(z + 1), z * gamma_real(z)) < tol, "gamma recurrence at z=" + real_str(z, 5));
  }
  const Real qtol = pow(Real(10), -static_cast<int>(default_digits()) + 10);
  for (const char* qs : {"0.5", "0.3333333333333333333333333333333333333333333333333333"})
    for (const char* zs : {"0.3", "1.7", "2.5", "-0.4"}) {
      Real q(qs), z(zs);
      c.check(rel_diff(qgamma_real(z + 1, q), qnum_floor_real(z, q) * qgamma_real(z, q)) < qtol,
              std::string("q-gamma recurrence at z=") + zs);
    }
  for (long n = 1; n <= 15; ++n) c.check(barnes_g_int(n + 1) == factorial(n - 1) * barnes_g_int(n), "Barnes G recurrence");
  c.check(rat_str(parse_rat("-6/4")) == "-3/2", "parse -6/4");
  c.check(parse_rat("0.7") == BigRat(7, 10), "parse 0.7 exactly");
  c.check(parse_rat("007") == 7, "parse leading zeros");
  c.check(qnum_symmetric(3) == QRat::u_pow(-2) + QRat(1) + QRat::u_pow(2), "[3]_q symmetric");
  c.check(qnum_floor(3) == QRat(1) + QRat::q_pow(1) + QRat::q_pow(2), "floor 3 q-number");
}

void suite_partitions(Checker& c, RationalSampler& rng) {
  std::uniform_int_distribution<int> len(0, 20), part(1, 20);
  int bad = 0;
  for (int t = 0; t < 10000; ++t) {
    std::vector<int> v(static_cast<std::size_t>(len(rng.engine())));
    for (auto& x : v) x = part(rng.engine());
    std::sort(v.rbegin(), v.rend());
    Partition p(v);
    if (conjugate(conjugate(p)) != p || conjugate(p).size() != p.size()) ++bad;
  }
  c.check(bad == 0, "conjugate involution on 10^4 random partitions");
  for (int L = 0; L <= 8; ++L)
    for (int M = 0; M <= 8; ++M)
      c.check(BigInt(enumerate_bounded(L, M).size()) == binomial(L + M, L),
              "|Y_{L,M}| = C(L+M,L) at L=" + std::to_string(L) + ", M=" + std::to_string(M));
  for (int L = 0; L <= 5; ++L)
    for (int M = 0; M <= 5; ++M)
      for (const auto& mu : enumerate_bounded(L, M)) {
        Partition r = rectangle_complement(mu, L, M);
        c.check(rectangle_complement(r, L, M) == mu, "complement involution " + pstr(mu));
        c.check(conjugate(r) == rectangle_complement(conjugate(mu), M, L), "complement commutes with conjugation " + pstr(mu));
        c.check(r.size() == L * M - mu.size(), "complement size");
      }
  // hook-length formula: number of SYT squared summed over |l| = n is n!
  for (int n = 1; n <= 7; ++n) {
    BigInt s = 0;
    for (const auto& l : enumerate_bounded(n, n)) {
      if (l.size() != n) continue;
      BigInt h = 1;
      for (const auto& cell : hook_content_data(l)) h *= cell.hook;
      BigInt f = factorial(n) / h;
      s += f * f;
    }
    c.check(s == factorial(n), "sum of f_lambda^2 = n! at n=" + std::to_string(n));
  }
}

void suite_symfun(Checker& c, RationalSampler& rng) {
  auto y33 = enumerate_bounded(3, 3);
  for (int M = 0; M <= 5; ++M)
    for (const auto& l : y33)
      c.check(schur_eval(l, std::vector<BigRat>(static_cast<std::size_t>(M), BigRat(1))) == schur_principal(l, M),
              "s(1^M) = principal " + pstr(l));
  for (int M = 1; M <= 4; ++M)
    for (const auto& l : y33)
      c.check(qdim(l, M).eval(BigRat(1)) == schur_principal(l, M), "qdim at u=1 " + pstr(l));
  for (int t = 0; t < 5; ++t) {
    auto z = rng.distinct(4);
    for (const auto& l : y33) {
      BigRat s = schur_eval(l, z);
      c.check(s == schur_bialternant(l, z), "Jacobi-Trudi vs bialternant " + pstr(l));
      for (int p = 0; p < 4; ++p) {
        auto w = z;
        rng.shuffle(w);
        c.check(schur_eval(l, w) == s, "schur symmetry " + pstr(l));
      }
    }
  }
  for (auto [L, M] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {4, 2}})
    for (int t = 0; t < 20; ++t) {
      auto pr = dual_cauchy_check(rng.distinct(static_cast<std::size_t>(L)), rng.distinct(static_cast<std::size_t>(M)));
      c.check(pr.first == pr.second, "dual Cauchy (" + std::to_string(L) + "," + std::to_string(M) + ")");
    }
  for (int t = 0; t < 4; ++t) {
    BigRat x = rng.next();
    std::vector<BigRat> z{x, BigRat(1) / x};
    BigRat w = (x + 1 / x) / 2;
    for (int j = 0; j <= 5; ++j)
      for (int k = 0; k <= 5; ++k)
        c.check(schur_eval(Partition({k + j, k}), z) == chebyshev_u(j, w), "two-variable bridge j,k <= 5");
  }
}

void suite_ensembles(Checker& c, RationalSampler&) {
  auto y33 = enumerate_bounded(3, 3);
  // odd size forces zero; some even shapes vanish as well, e.g. (3,2,1)
  json even_zeros = json::array();
  MomentTable<BigRat> gue(EnsembleSpec::gue(), 3);
  for (const auto& mu : y33) {
    BigRat v = schur_avg_gue(mu, 3);
    if (mu.size() % 2) c.check(v == 0, "GUE parity " + pstr(mu));
    else if (v == 0) even_zeros.push_back(to_json(mu));
    c.check(v == schur_avg_oracle(gue, mu, 3), "GUE oracle " + pstr(mu));
  }
  c.result().report["gue_even_zeros_M3"] = even_zeros;
  for (int a = 1; a <= 2; ++a)
    for (int M = 1; M <= 3; ++M)
      for (const auto& mu : enumerate_bounded(2, 2)) {
        if (mu.length() > M) continue;
        BigRat v = schur_avg_lue(mu, M, a);
        c.check(lue_alpha_shift_form(mu, M, a) == v, "LUE alpha shift " + pstr(mu));
        c.check(lue_dimension_form(mu, M, a) == v, "LUE dimension form " + pstr(mu));
      }
  for (const auto& s : {EnsembleSpec::gue(), EnsembleSpec::lue(1), EnsembleSpec::jue(1, 2), EnsembleSpec::lue(BigRat(1, 2))}) {
    auto os = ortho_system<BigRat>(s, 5);
    for (int j = 0; j < 5; ++j)
      c.check(hankel_det<BigRat>(s, j + 1) / hankel_det<BigRat>(s, j) == os.h[j], "h_j from Hankel ratio, " + s.name());
  }
  {
    auto s = EnsembleSpec::sw();
    auto os = ortho_system<QRat>(s, 3);
    for (int j = 0; j < 3; ++j)
      c.check(hankel_det<QRat>(s, j + 1) / hankel_det<QRat>(s, j) == os.h[j], "h_j from Hankel ratio, sw");
  }
  // qLUE -> LUE as q -> 1
  for (int a = 0; a <= 1; ++a)
    for (const auto& mu : {Partition({1}), Partition({2, 1}), Partition({1, 1})}) {
      Real lue = to_real(schur_avg_lue(mu, 2, a)), prev = -1;
      bool shrinking = true;
      for (int k = 2; k <= 5; ++k) {
        auto s = EnsembleSpec::qlue(a, 1 - BigRat(1, static_cast<long>(std::pow(10, k))));
        Real e = rel_diff(schur_avg_closed<Real>(s, mu, 2), lue);
        if (prev >= 0 && !(e < prev)) shrinking = false;
        prev = e;
      }
      c.check(shrinking && prev < Real("1e-3"), "qLUE -> LUE as q -> 1 " + pstr(mu));
    }
  // Ginibre pair average against the bimoment oracle
  MomentTable<BigRat> gin(EnsembleSpec::ginibre(), 3);
  for (const auto& l : y33)
    for (const auto& m : y33)
      c.check(schur_pair_avg_ginibre(l, m, 3) == pair_avg_oracle(gin, l, m, 3), "Ginibre pair average " + pstr(l) + pstr(m));
}

void suite_kernels(Checker& c, RationalSampler& rng) {
  for (const auto& s : {EnsembleSpec::lue(1), EnsembleSpec::jue(0, 1), EnsembleSpec::jue(1, 0), EnsembleSpec::jue(0, 0)})
    for (int n = 1; n <= 2; ++n)
      for (int N = n; N <= 4; ++N)
        for (int t = 0; t < 3; ++t) {
          auto p = rng.distinct(static_cast<std::size_t>(2 * n));
          std::vector<BigRat> x(p.begin(), p.begin() + n), y(p.begin() + n, p.end());
          c.guard("kernels " + s.name(), [&] {
            BigRat a = khat_schur(s, N, x, y);
            c.check(a == khat_double(s, N, x, y) && a == khat_cd(s, N, x, y),
                    "khat three-way equality " + s.name() + " N=" + std::to_string(N));
          });
        }
  for (const auto& s : {EnsembleSpec::gue(), EnsembleSpec::lue(0), EnsembleSpec::jue(2, 1)})
    for (int N = 1; N <= 5; ++N)
      for (int n = 1; n <= std::min(N, 2); ++n) {
        auto tab = expansion_table<BigRat>(s, N, n);
        c.check(tab.front().first.empty() && tab.front().second == 1, "expansion coefficient of the empty partition is 1");
        if (s.kind != Kind::GUE) {
          bool pos = true;
          for (const auto& e : tab) pos = pos && e.second > 0;
          c.check(pos, "expansion coefficients positive for " + s.name());
        }
      }
  {
    auto p = rng.distinct(4);
    c.check(symmetry_check(EnsembleSpec::jue(1, 1), 4, std::vector<BigRat>{p[0], p[1]}, std::vector<BigRat>{p[2], p[3]},
                           rng.engine()()),
            "S_4 invariance under seeded shuffles");
  }
  for (int N = 1; N <= 5; ++N) {
    BigRat x = rng.next(), y = rng.next();
    c.check(ginibre_khat_schur(N, std::vector<BigRat>{x}, std::vector<BigRat>{y}) == ginibre_kernel(N, x, y),
            "Ginibre single sum N=" + std::to_string(N));
  }
  for (int N = 1; N <= 4; ++N) {
    BigRat z = rng.next(), a = 1, b = BigRat(3, 2);
    BigRat v = df_chiral_kernel(N, std::vector<BigRat>{z}, a, b);
    c.check(v == df_chiral_kernel_n1<BigRat>(N, z, a, b, BigRat(1)) && v == df_chiral_kernel_elementary(N, z, a, b),
            "chiral kernel three forms N=" + std::to_string(N));
  }
  // at M = 1 the Dotsenko-Fateev normalization is pi gamma(1+a) gamma(1+b) gamma(-1-a-b), gamma(x) = G(x)/G(1-x)
  {
    Real a("0.3"), b("0.45");
    auto gr = [](const Real& x) { return gamma_real(x) / gamma_real(1 - x); };
    Real want = boost::math::constants::pi<Real>() * gr(1 + a) * gr(1 + b) * gr(-1 - a - b);
    Real got = df_partition(1, a, b, Real("0.7"));
    c.check(rel_diff(got, want) < Real("1e-40"), "Dotsenko-Fateev M=1 closed form");
  }
  {
    bool threw = false;
    try {
      df_partition(1, Real(1), Real(1), Real(1));
    } catch (const MathError&) {
      threw = true;
    }
    c.check(threw, "Dotsenko-Fateev pole at integer exponents reported");
  }
}

void suite_painleve(Checker& c, RationalSampler&) {
  for (auto [n, M] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}}) {
    auto s = f2n_schur(n, M);
    c.check(s == f2n_wronskian(n, M), "f2n Schur = Wronskian n=" + std::to_string(n) + " M=" + std::to_string(M));
    c.check(s.poly.degree() == 2 * n * M, "f2n degree 2nM");
    auto b = b_coeffs(n, M, 2);
    c.check(b[0] == 0 && b[1] == b2_closed(n, M), "b1 = 0 and b2 closed form");
  }
  for (int n = 0; n <= 3; ++n)
    for (int M = 0; M <= 4; ++M) {
      auto z = f2n_zero(n, M);
      c.check(z.schur == z.barnes, "f2n(0) Schur = Barnes n=" + std::to_string(n) + " M=" + std::to_string(M));
    }
  {
    BigRat x = 3;
    BigRat moment = char_poly_moment<BigRat>(EnsembleSpec::lue(2), 2, 2, -x);
    BigRat fw = confluence_prefactor(1, 2) * f2n_wronskian(1, 2).poly.eval(x);
    c.check(moment == fw && f2n_wronskian(1, 2).poly.eval(x) == BigRat(779, 4), "confluence at (n,M)=(1,2), x=3");
  }
  for (int M = 1; M <= 2; ++M) {
    auto f = sw_fermion_check(M, 1);
    c.check(f.proportional, "fermion proportionality M=" + std::to_string(M));
  }
  c.check(laguerre_poly(2, 0) == RatPoly({BigRat(1), BigRat(-2), BigRat(1, 2)}), "L_2(x) = 1 - 2x + x^2/2");
}

void suite_toeplitz(Checker& c, RationalSampler& rng) {
  for (int g = 0; g <= 3; ++g)
    for (int d = 0; d <= 3; ++d) {
      for (int M = 1; M <= 6; ++M) {
        auto T = toeplitz_matrix(g, d, M);
        c.check(matmul(toeplitz_inverse_closed(g, d, M), T) == identity_matrix<BigRat>(static_cast<std::size_t>(M)),
                "closed inverse times T = I");
        c.check(duduchava_roch_check(g, d, M), "Duduchava-Roch g=" + std::to_string(g) + " d=" + std::to_string(d));
      }
      for (int k = -d - 1; k <= g + 1; ++k) {
        BigRat conv = 0;
        for (int i = 0; i <= g; ++i) conv += fh_coeff(g, 0, i) * fh_coeff(0, d, k - i);
        c.check(conv == fh_coeff(g, d, k), "symbol factorization");
      }
      for (int N = 1; N <= 4; ++N) {
        BigRat x = rng.next(), y = rng.next();
        c.check(fh_kernel_circular<BigRat>(g, d, N, x, y) == fh_kernel_generating<BigRat>(g, d, N, x, y),
                "FH generating function vs circular averages");
      }
    }
}

void suite_heat(Checker& c, RationalSampler& rng) {
  const Real rounding = pow(Real(10), -static_cast<int>(default_digits()) + 5);
  for (const char* qs : {"0.1", "0.5", "0.8"})
    for (const char* xs : {"-1.5", "0", "0.7", "2"})
      for (const char* es : {"-2", "0.3", "1"}) {
        Real q(qs), xi(xs), eta(es);
        Real closed = heat_kernel_closed(q, xi, eta);
        c.check(rel_diff(closed, heat_kernel_closed(q, eta, xi)) < Real("1e-45"), "closed form symmetric");
        for (int J : {5, 20, 60}) {
          Real s = heat_kernel_sum(HeatQuery(q, xi, eta, J));
          Real bound = Real((J + 1) * (J + 1)) * (1 + q) * pow(q, J) / pow(1 - q, 3) + rounding;
          c.check(abs(s - closed) <= bound, std::string("tail bound q=") + qs);
          c.check(rel_diff(s, heat_kernel_sum(HeatQuery(q, eta, xi, J))) < rounding, "partial sum symmetric");
        }
      }
  c.check(heat_kernel_sum(HeatQuery(Real("0.5"), Real(1), Real(-1), 1)) == 1, "one term gives 1");
  for (int t = 0; t < 10; ++t) {
    BigRat x = rng.next(), y = rng.next(), q = rng.next();
    for (int k = 0; k <= 3; ++k) {
      auto d = schur_doubling(x, y, q, 10, k);
      c.check(d.schur_terms == d.h_terms && d.h_terms == d.chebyshev_terms, "Schur doubling termwise k=" + std::to_string(k));
    }
  }
}

// ---------------------------------------------------------------- criteria

void criterion_01(Checker& c, RationalSampler&) {
  auto t0 = std::chrono::steady_clock::now();
  auto y33 = enumerate_bounded(3, 3);
  std::vector<EnsembleSpec> specs{EnsembleSpec::gue()};
  for (int a = 0; a <= 2; ++a) specs.push_back(EnsembleSpec::lue(a));
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) specs.push_back(EnsembleSpec::jue(a, b));
  int exact = 0;
  for (int M : {3, 4}) {
    auto per_m = specs;
    for (int a = 0; a <= 1; ++a) per_m.push_back(EnsembleSpec::jue_tilde(a, a + M + 3));
    per_m.push_back(EnsembleSpec::lue_tilde(2 * M + 4));
    per_m.push_back(EnsembleSpec::lue_tilde(BigRat(4 * M + 9, 2)));
    for (const auto& s : per_m) {
      MomentTable<BigRat> m(s, M);
      for (const auto& mu : y33)
        c.guard(s.name() + " " + pstr(mu), [&] {
          c.check(schur_avg_exact(s, mu, M) == schur_avg_oracle(m, mu, M),
                  s.name() + " M=" + std::to_string(M) + " mu=" + pstr(mu));
          ++exact;
        });
    }
    for (const auto& s : {EnsembleSpec::sw(), EnsembleSpec::qlue(0), EnsembleSpec::qlue(1)}) {
      MomentTable<QRat> m(s, M);
      for (const auto& mu : y33)
        c.guard(s.name() + " " + pstr(mu), [&] {
          c.check(schur_avg_closed<QRat>(s, mu, M) == schur_avg_oracle(m, mu, M),
                  s.name() + " M=" + std::to_string(M) + " mu=" + pstr(mu));
          ++exact;
        });
    }
  }
  Real worst = 0;
  for (int M : {3, 4}) {
    const EnsembleSpec lue = EnsembleSpec::lue(BigRat(1, 2)), jue = EnsembleSpec::jue(BigRat(7, 10), BigRat(13, 10));
    MomentTable<Real> ml(lue, M), mj(jue, M);
    for (const auto& mu : y33) {
      Real e1 = rel_diff(schur_avg_lue_real(mu, M, to_real(lue.alpha)), schur_avg_oracle(ml, mu, M));
      Real e2 = rel_diff(schur_avg_jue_real(mu, M, to_real(jue.alpha), to_real(jue.beta)), schur_avg_oracle(mj, mu, M));
      // the exact Pochhammer path must agree with the Gamma path too
      Real e3 = rel_diff(to_real(schur_avg_lue(mu, M, lue.alpha)), schur_avg_lue_real(mu, M, to_real(lue.alpha)));
      worst = std::max({worst, e1, e2, e3});
      c.check(e1 < Real("1e-40") && e2 < Real("1e-40") && e3 < Real("1e-40"), "non-integer spot check " + pstr(mu));
    }
  }
  double secs = since(t0);
  c.check(secs <= 60, "runtime <= 60 s");
  c.result().report["exact_comparisons"] = exact;
  c.result().report["worst_relative_error"] = real_str(worst, 6);
}

std::vector<EnsembleSpec> theorem_specs() {
  return {EnsembleSpec::gue(), EnsembleSpec::lue(0), EnsembleSpec::lue(2), EnsembleSpec::jue(1, 1)};
}

void criterion_02(Checker& c, RationalSampler& rng) {
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& s : theorem_specs())
    for (int n = 1; n <= 2; ++n)
      for (int N = n; N <= 5; ++N)
        for (int t = 0; t < 10; ++t) {
          std::vector<BigRat> x, y;
          if (n == 1) {
            // y = x s^2 keeps sqrt(xy) rational for the Chebyshev form
            BigRat a = rng.next(), r = rng.next();
            x = {a};
            y = {a * r * r};
          } else {
            auto p = rng.distinct(4);
            x = {p[0], p[1]};
            y = {p[2], p[3]};
          }
          std::string tag = s.name() + " N=" + std::to_string(N) + " n=" + std::to_string(n) + " x=" + vstr(x) + " y=" + vstr(y);
          c.guard(tag, [&] {
            BigRat a = khat_schur(s, N, x, y), b = khat_double(s, N, x, y), d = khat_cd(s, N, x, y);
            bool ok = a == b && b == d;
            if (n == 1) ok = ok && a == k2_chebyshev(s, N, x[0], y[0]);
            c.check(ok, tag);
          });
        }
  double secs = since(t0);
  c.check(secs <= 30, "runtime <= 30 s");
}

void criterion_03(Checker& c, RationalSampler& rng) {
  for (const auto& s : theorem_specs())
    for (int N = 1; N <= 5; ++N) {
      auto os = ortho_system<BigRat>(s, N);
      for (int t = 0; t < 10; ++t) {
        BigRat x = rng.next(), y = rng.next();
        c.check(hankel_inverse_gen(s, N, x, y) == kernel_cd(os, N, x, y), s.name() + " N=" + std::to_string(N));
      }
    }
}

void criterion_04(Checker& c, RationalSampler& rng) {
  auto p = rng.distinct(4);
  int count = 0;
  bool ok = symmetry_check_all(EnsembleSpec::lue(0), 4, std::vector<BigRat>{p[0], p[1]}, std::vector<BigRat>{p[2], p[3]}, &count);
  c.check(ok, "khat_schur invariant under every permutation of t");
  c.check(count == 24, "24 permutations visited");
  c.result().report["permutations"] = count;
}

void criterion_05(Checker& c, RationalSampler& rng) {
  auto t0 = std::chrono::steady_clock::now();
  suite_painleve(c, rng);
  json b2 = json::object();
  for (auto [n, M] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}})
    b2[std::to_string(n) + "," + std::to_string(M)] = rat_str(b_coeffs(n, M, 2)[1]);
  c.check(b2_closed(1, 2) == BigRat(-1, 10), "b2 = -1/10 at n=1, M=2");
  double secs = since(t0);
  c.check(secs <= 60, "runtime <= 60 s");
  c.result().report["b2"] = b2;
}

void criterion_06(Checker& c, RationalSampler& rng) {
  for (auto [L, M] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {4, 2}})
    for (int t = 0; t < 20; ++t) {
      std::vector<BigRat> tt, z;
      for (int i = 0; i < L; ++i) tt.push_back(rng.next());
      for (int i = 0; i < M; ++i) z.push_back(rng.next());
      auto pr = dual_cauchy_check(tt, z);
      c.check(pr.first == pr.second, "(2n,M)=(" + std::to_string(L) + "," + std::to_string(M) + ") t=" + vstr(tt) + " z=" + vstr(z));
    }
}

void criterion_07(Checker& c, RationalSampler& rng) {
  for (int N = 1; N <= 5; ++N)
    for (int t = 0; t < 5; ++t) {
      BigRat x = rng.next(), y = rng.next();
      c.check(ginibre_khat_schur(N, std::vector<BigRat>{x}, std::vector<BigRat>{y}) == ginibre_kernel(N, x, y),
              "complex Ginibre N=" + std::to_string(N));
    }
  for (int N = 1; N <= 4; ++N)
    for (int t = 0; t < 3; ++t) {
      BigRat x = rng.next(), y = rng.next();
      BigRat k = real_ginibre_kernel(N, x, y);
      c.check(k == -real_ginibre_kernel(N, y, x), "real Ginibre antisymmetry N=" + std::to_string(N));
      c.check(k == real_ginibre_oracle(N, x, y), "real Ginibre vs Gaussian moments N=" + std::to_string(N));
    }
}

void criterion_08(Checker& c, RationalSampler& rng) {
  const std::vector<std::pair<BigRat, BigRat>> ab{{0, 0}, {1, 2}, {BigRat(1, 2), BigRat(3, 2)}};
  for (const auto& [a, b] : ab)
    for (int N = 1; N <= 4; ++N)
      for (int t = 0; t < 3; ++t) {
        std::vector<BigRat> x{rng.next()}, y{rng.next()};
        c.check(df_kernel_factorized(N, x, y, a, b) == df_khat_double(N, x, y, a, b),
                "DF factorization N=" + std::to_string(N) + " a=" + rat_str(a) + " b=" + rat_str(b));
      }
  for (const auto& [a, b] : ab)
    for (int M = 2; M <= 3; ++M)
      for (const auto& lp : enumerate_bounded(2, 2))
        c.check(jack_avg_jacobi_coeff<BigRat>(lp, M, a, b, BigRat(1)) == schur_avg_jue(lp, M, a, b),
                "Kadell at gamma=1 " + pstr(lp) + " M=" + std::to_string(M));
  Real worst = 0;
  for (const auto& [a, b] : ab)
    for (int M = 1; M <= 3; ++M) {
      EnsembleSpec s = EnsembleSpec::jue(a, b);
      Real e = rel_diff(selberg_partition(M, to_real(a), to_real(b), Real(1)), hankel_det<Real>(s, M));
      worst = std::max(worst, e);
      c.check(e < Real("1e-40"), "Selberg product vs Hankel determinant M=" + std::to_string(M));
    }
  c.result().report["selberg_worst_relative_error"] = real_str(worst, 6);
}

void criterion_09(Checker& c, RationalSampler&) {
  json rows = json::array();
  for (int M = 1; M <= 3; ++M) {
    auto f = sw_fermion_check(M, 1);
    c.check(f.proportional, "fermion expansion proportional to the oracle M=" + std::to_string(M));
    c.check(!f.constant.is_zero(), "nonzero constant");
    json r;
    r["M"] = M;
    r["constant"] = f.constant.str();
    r["z_ratio"] = f.z_ratio.str();
    rows.push_back(r);
  }
  c.result().report["fermion"] = rows;
}

void criterion_10(Checker& c, RationalSampler& rng) {
  for (int g = 1; g <= 3; ++g)
    for (int d = 1; d <= 3; ++d)
      for (int M = 1; M <= 6; ++M) {
        std::string tag = "g=" + std::to_string(g) + " d=" + std::to_string(d) + " M=" + std::to_string(M);
        c.check(toeplitz_inverse_closed(g, d, M) == toeplitz_inverse_exact(g, d, M), "closed inverse " + tag);
        c.check(duduchava_roch_check(g, d, M), "Duduchava-Roch " + tag);
      }
  for (int g = 0; g <= 3; ++g)
    for (int d = 0; d <= 3; ++d)
      for (int N = 1; N <= 4; ++N)
        for (int t = 0; t < 3; ++t) {
          BigRat x = rng.next(), y = rng.next();
          BigRat v = fh_kernel_generating<BigRat>(g, d, N, x, y);
          bool ok = v == fh_kernel_circular<BigRat>(g, d, N, x, y);
          if (g > 0 || d > 0) ok = ok && v == fh_kernel_from_inverse(toeplitz_inverse_closed(g, d, N), x, y);
          c.check(ok, "FH generating function g=" + std::to_string(g) + " d=" + std::to_string(d) + " N=" + std::to_string(N));
        }
}

void criterion_11(Checker& c, RationalSampler& rng) {
  Real worst = 0;
  for (const char* qs : {"0.1", "0.5", "0.9"})
    for (const char* xs : {"-2", "-1", "0", "1", "2"})
      for (const char* es : {"-2", "-1", "0", "1", "2"}) {
        Real q(qs), xi(xs), eta(es);
        Real e = abs(heat_kernel_sum(HeatQuery(q, xi, eta)) - heat_kernel_closed(q, xi, eta));
        worst = std::max(worst, e);
        c.check(e <= Real("1e-25"), std::string("heat kernel q=") + qs + " xi=" + xs + " eta=" + es);
      }
  for (int t = 0; t < 10; ++t) {
    BigRat x = rng.next(), y = rng.next(), q = rng.next();
    for (int J = 1; J <= 10; ++J) {
      auto d = schur_doubling(x, y, q, J, 0);
      auto pr = schur_doubling_check(x, y, q, J);
      c.check(d.schur_terms == d.h_terms && pr.first == pr.second && d.schur_sum == pr.first,
              "doubling J=" + std::to_string(J) + " x=" + rat_str(x));
    }
  }
  c.result().report["worst_abs_error"] = real_str(worst, 6);
}

void criterion_12(Checker& c, RationalSampler&) {
  json rows = json::array();
  for (const auto& mu : {Partition({1}), Partition({1, 1})})
    for (int M = mu.length(); M <= 2; ++M)
      for (const char* qs : {"1/2", "1/3"}) {
        Real q = to_real(parse_rat(qs)), prev = -1;
        bool mono = true;
        json r;
        r["mu"] = to_json(mu);
        r["M"] = M;
        r["q"] = qs;
        json ratios = json::array();
        for (const char* as : {"10.5", "20.5", "40.5"}) {
          auto p = askey_limit_check(mu, M, Real(as), q);
          Real d = abs(p.ratio() - 1);
          if (prev >= 0 && !(d < prev)) mono = false;
          prev = d;
          ratios.push_back(real_str(p.ratio(), 12));
        }
        r["ratios"] = ratios;
        rows.push_back(r);
        c.check(mono, "ratio tends to 1 monotonically mu=" + pstr(mu) + " M=" + std::to_string(M) + " q=" + qs);
      }
  c.result().report["askey"] = rows;
}

struct SuiteDef {
  std::string name, title;
  std::function<void(Checker&, RationalSampler&)> run;
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> r{
      {"core-arith", "exact arithmetic, q-numbers, special functions", suite_core_arith},
      {"partitions", "partitions, conjugation, rectangle complements", suite_partitions},
      {"symfun", "Schur functions, dual Cauchy, two-variable bridge", suite_symfun},
      {"ensembles", "ensemble averages, parity, alpha shift, q -> 1", suite_ensembles},
      {"kernels", "kernel expansions, Ginibre, chiral kernels", suite_kernels},
      {"painleve", "f_2n, Taylor coefficients, fermion identity", suite_painleve},
      {"toeplitz", "Toeplitz inverses, Duduchava-Roch, symbols", suite_toeplitz},
      {"heat", "Chebyshev heat kernel and Schur doubling", suite_heat},
      {"criterion-01", "closed-form averages equal the determinant oracle", criterion_01},
      {"criterion-02", "khat: Schur = double = Christoffel-Darboux = Chebyshev", criterion_02},
      {"criterion-03", "inverse Hankel generating function = kernel", criterion_03},
      {"criterion-04", "S_4 invariance of khat_schur (LUE, N=4, n=2)", criterion_04},
      {"criterion-05", "f_2n Schur = Wronskian, b1, b2, f_2n(0)", criterion_05},
      {"criterion-06", "dual Cauchy identity", criterion_06},
      {"criterion-07", "complex and real Ginibre kernels", criterion_07},
      {"criterion-08", "Dotsenko-Fateev factorization, Kadell, Selberg", criterion_08},
      {"criterion-09", "Stieltjes-Wigert fermion identity", criterion_09},
      {"criterion-10", "Toeplitz inverse, Duduchava-Roch, FH generating function", criterion_10},
      {"criterion-11", "heat kernel closed form and Schur doubling", criterion_11},
      {"criterion-12", "q-Laguerre to Stieltjes-Wigert limit", criterion_12},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& module_suites() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> r;
    for (const auto& d : registry())
      if (d.name.rfind("criterion-", 0) != 0) r.push_back(d.name);
    return r;
  }();
  return v;
}

const std::vector<std::string>& criterion_suites() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> r;
    for (const auto& d : registry())
      if (d.name.rfind("criterion-", 0) == 0) r.push_back(d.name);
    return r;
  }();
  return v;
}

std::vector<std::string> all_suites() {
  std::vector<std::string> r = module_suites();
  r.insert(r.end(), criterion_suites().begin(), criterion_suites().end());
  return r;
}

std::string suite_title(const std::string& name) {
  for (const auto& d : registry())
    if (d.name == name) return d.title;
  throw MathError("unknown suite '" + name + "'");
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  const SuiteDef* def = nullptr;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < registry().size(); ++i)
    if (registry()[i].name == name) {
      def = &registry()[i];
      idx = i;
    }
  if (!def) throw MathError("unknown suite '" + name + "'");
  SuiteResult r;
  r.name = def->name;
  r.title = def->title;
  Checker c(r);
  RationalSampler rng(opt.seed * 1000003ULL + idx);
  auto t0 = std::chrono::steady_clock::now();
  try {
    def->run(c, rng);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = since(t0);
  return r;
}

std::vector<SuiteResult> run_suites(const std::string& selection, const VerifyOptions& opt) {
  std::vector<std::string> names;
  if (selection == "all") {
    names = all_suites();
  } else if (selection == "modules") {
    names = module_suites();
  } else if (selection == "criteria") {
    names = criterion_suites();
  } else {
    std::stringstream ss(selection);
    std::string s;
    while (std::getline(ss, s, ','))
      if (!s.empty()) {
        suite_title(s);
        names.push_back(s);
      }
  }
  std::vector<SuiteResult> out(names.size());
  if (opt.jobs <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) out[i] = run_suite(names[i], opt);
    return out;
  }
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= names.size()) return;
        i = next++;
      }
      out[i] = run_suite(names[i], opt);
    }
  };
  std::vector<std::future<void>> fs;
  for (unsigned j = 0; j < opt.jobs; ++j) fs.push_back(std::async(std::launch::async, worker));
  for (auto& f : fs) f.get();
  return out;
}

json suite_json(const SuiteResult& r) {
  json j;
  j["suite"] = r.name;
  j["title"] = r.title;
  j["passed"] = r.passed();
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.messages.empty()) j["messages"] = r.messages;
  if (!r.report.empty()) j["report"] = r.report;
  return j;
}

}  // namespace schurk
