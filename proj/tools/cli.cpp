#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "schurk/heat.hpp"
#include "schurk/io.hpp"
#include "schurk/kernels.hpp"
#include "schurk/painleve.hpp"
#include "schurk/toeplitz.hpp"
#include "schurk/verify.hpp"

using namespace schurk;

namespace {

struct Global {
  std::uint64_t seed = VerifyOptions{}.seed;
  unsigned precision = 0;
  std::string format = "json";
};

struct EnsembleArgs {
  std::string name, alpha = "0", beta = "0", q = "1/2", field = "exact";
  void add(CLI::App* c) {
    c->add_option("--ensemble", name, "gue, lue, jue, jue-tilde, lue-tilde, sw, qlue, ginibre")->required();
    c->add_option("--alpha", alpha, "alpha (alpha~ for lue-tilde), rational or exact decimal");
    c->add_option("--beta", beta, "beta");
    c->add_option("--q", q, "q in (0,1) for sw and qlue");
    c->add_option("--field", field, "exact or real")->check(CLI::IsMember({"exact", "real"}));
  }
  EnsembleSpec spec() const { return make_ensemble(name, alpha, beta, q); }
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ',')) out.push_back(t);
  return out;
}

bool q_kind(const EnsembleSpec& s) { return s.kind == Kind::SW || s.kind == Kind::qLUE; }

template <class F>
F from_str(const std::string& s);
template <>
BigRat from_str<BigRat>(const std::string& s) { return parse_rat(s); }
template <>
QRat from_str<QRat>(const std::string& s) { return QRat(parse_rat(s)); }
template <>
Real from_str<Real>(const std::string& s) { return parse_real(s); }

template <class F>
std::vector<F> points(const std::string& s) {
  std::vector<F> v;
  for (const auto& t : split(s)) v.push_back(from_str<F>(t));
  return v;
}

void emit(const json& j, const Global& g) {
  if (g.format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : j.items()) std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

template <class F>
json schur_avg_value(const EnsembleSpec& s, const Partition& mu, int M, const std::string& method) {
  if (method == "oracle") return to_json(schur_avg_oracle<F>(s, mu, M));
  return to_json(schur_avg_closed<F>(s, mu, M));
}

template <class F>
json kernel_expand(const EnsembleSpec& s, int N, int n) {
  json terms = json::array();
  for (const auto& [l, c] : expansion_table<F>(s, N, n)) {
    json t;
    t["lambda"] = to_json(l);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  json j;
  j["ensemble"] = s.name();
  j["N"] = N;
  j["n"] = n;
  j["terms"] = terms;
  return j;
}

template <class F>
F kernel_eval(const EnsembleSpec& s, int N, const std::vector<F>& x, const std::vector<F>& y, const std::string& method) {
  const int n = static_cast<int>(x.size());
  if (x.size() != y.size()) throw MathError("--x and --y need the same number of values");
  if (s.kind == Kind::Ginibre) {
    if (method == "schur") return ginibre_khat_schur(N, x, y);
    if (method == "closed" && n == 1) return ginibre_kernel(N, x[0], y[0]);
    throw MathError("ginibre supports --method schur, or closed with n = 1");
  }
  if (method == "schur") return khat_schur(s, N, x, y);
  if (method == "double") return khat_double(s, N, x, y);
  if (method == "cd") return khat_cd(s, N, x, y);
  if (n != 1) throw MathError("--method " + method + " needs n = 1");
  if (method == "hankel") {
    auto os = ortho_system<F>(s, N);
    return os.h[N - 1] * hankel_inverse_gen(s, N, x[0], y[0]) / ipow(x[0] * y[0], N - 1);
  }
  if (method == "chebyshev") {
    if constexpr (std::is_same_v<F, BigRat>) {
      return k2_chebyshev(s, N, x[0], y[0]);
    } else if constexpr (std::is_same_v<F, Real>) {
      if (x[0] * y[0] <= 0) throw MathError("chebyshev form needs xy > 0 in real mode");
      return k2_chebyshev<Real>(s, N, x[0], y[0], Real(sqrt(x[0] * y[0])));
    } else {
      throw MathError("chebyshev form is not available for q-ensembles");
    }
  }
  throw MathError("unknown method '" + method + "'");
}

int run_verify(const std::string& suite, unsigned jobs, const Global& g) {
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.jobs = jobs;
  auto rows = run_suites(suite, opt);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.passed();
  if (g.format == "json") {
    json j;
    j["seed"] = g.seed;
    j["passed"] = ok;
    j["suites"] = json::array();
    for (const auto& r : rows) j["suites"].push_back(suite_json(r));
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "suite,passed,checks,failures\n";
    for (const auto& r : rows) std::cout << r.name << "," << (r.passed() ? "pass" : "FAIL") << "," << r.checks << "," << r.failures << "\n";
  } else {
    for (const auto& r : rows) {
      std::printf("%-14s %-4s %6d checks %4d failed  %s\n", r.name.c_str(), r.passed() ? "pass" : "FAIL", r.checks,
                  r.failures, r.title.c_str());
      for (const auto& m : r.messages) std::printf("    %s\n", m.c_str());
      if (!r.error.empty()) std::printf("    error: %s\n", r.error.c_str());
      if (!r.report.empty()) std::printf("    %s\n", r.report.dump().c_str());
    }
    std::printf("%s\n", ok ? "all suites passed" : "some suites FAILED");
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur-function expansions of random-matrix kernels"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "seed for random test points");
  app.add_option("--precision", g.precision, "decimal digits for real arithmetic (default SCHURK_PRECISION or 50)");
  app.add_option("--format", g.format, "json or csv (verify also accepts table)")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // schur-avg
  auto* sa = app.add_subcommand("schur-avg", "average of a Schur polynomial");
  EnsembleArgs sa_e;
  sa_e.add(sa);
  int sa_m = 0;
  std::string sa_part, sa_method = "closed";
  sa->add_option("--m", sa_m, "number of eigenvalues")->required();
  sa->add_option("--partition", sa_part, "parts, comma separated")->required();
  sa->add_option("--method", sa_method, "closed or oracle")->check(CLI::IsMember({"closed", "oracle"}));

  // kernel expand / eval
  auto* ker = app.add_subcommand("kernel", "kernel expansions");
  ker->require_subcommand(1);
  auto* kx = ker->add_subcommand("expand", "coefficients <s_lambda'> over Y_{2n,N-n}");
  EnsembleArgs kx_e;
  kx_e.add(kx);
  int kx_N = 0, kx_n = 1;
  kx->add_option("--N", kx_N)->required();
  kx->add_option("--n", kx_n);
  auto* ke = ker->add_subcommand("eval", "evaluate khat at a point");
  EnsembleArgs ke_e;
  ke_e.add(ke);
  int ke_N = 0, ke_n = 1;
  std::string ke_x, ke_y, ke_method = "schur";
  ke->add_option("--N", ke_N)->required();
  ke->add_option("--n", ke_n);
  ke->add_option("--x", ke_x, "n values, comma separated")->required();
  ke->add_option("--y", ke_y, "n values, comma separated")->required();
  ke->add_option("--method", ke_method, "schur, double, cd, chebyshev, hankel, closed")
      ->check(CLI::IsMember({"schur", "double", "cd", "chebyshev", "hankel", "closed"}));

  // painleve coeffs
  auto* pv = app.add_subcommand("painleve", "f_2n(x)");
  pv->require_subcommand(1);
  auto* pc = pv->add_subcommand("coeffs", "f_2n as poly(x) exp(-Mx/2) and its Taylor data");
  int pc_n = 1, pc_m = 1, pc_upto = 4;
  std::string pc_form = "schur";
  pc->add_option("--n", pc_n)->required();
  pc->add_option("--m", pc_m)->required();
  pc->add_option("--upto", pc_upto, "number of b_k to print");
  pc->add_option("--form", pc_form, "schur or wronskian")->check(CLI::IsMember({"schur", "wronskian"}));

  // toeplitz
  auto* tp = app.add_subcommand("toeplitz", "Fisher-Hartwig Toeplitz matrices");
  tp->require_subcommand(1);
  int tg = 0, td = 0, ts = 1;
  std::string t_method = "exact";
  auto* ti = tp->add_subcommand("inverse", "inverse of T_M");
  auto* tv = tp->add_subcommand("verify-dr", "check the Duduchava-Roch block identity");
  for (auto* c : {ti, tv}) {
    c->add_option("--gamma", tg)->required()->check(CLI::NonNegativeNumber);
    c->add_option("--delta", td)->required()->check(CLI::NonNegativeNumber);
    c->add_option("--size", ts)->required()->check(CLI::PositiveNumber);
  }
  ti->add_option("--method", t_method, "exact or closed")->check(CLI::IsMember({"exact", "closed"}));

  // heat-kernel
  auto* hk = app.add_subcommand("heat-kernel", "Chebyshev heat kernel");
  std::string h_q, h_xi, h_eta;
  int h_terms = 0;
  hk->add_option("--q", h_q)->required();
  hk->add_option("--xi", h_xi)->required();
  hk->add_option("--eta", h_eta)->required();
  hk->add_option("--terms", h_terms, "partial-sum length (default: from the 1e-30 tolerance)");

  // verify
  auto* vf = app.add_subcommand("verify", "run invariant and acceptance suites");
  std::string vf_suite = "all";
  unsigned vf_jobs = 1;
  bool vf_list = false;
  vf->add_option("--suite", vf_suite, "all, modules, criteria, or comma-separated names");
  vf->add_option("--jobs", vf_jobs, "worker threads");
  vf->add_flag("--list", vf_list, "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    set_default_digits(g.precision ? g.precision : env_default_digits());
    if (g.format == "table" && !vf->parsed()) throw CLI::ValidationError("--format table applies to verify only");

    if (sa->parsed()) {
      auto s = sa_e.spec();
      Partition mu = parse_partition(sa_part);
      json j;
      if (sa_e.field == "real")
        j["value"] = schur_avg_value<Real>(s, mu, sa_m, sa_method);
      else if (q_kind(s))
        j["value"] = schur_avg_value<QRat>(s, mu, sa_m, sa_method);
      else
        j["value"] = schur_avg_value<BigRat>(s, mu, sa_m, sa_method);
      emit(j, g);
    } else if (kx->parsed()) {
      auto s = kx_e.spec();
      json j = kx_e.field == "real" ? kernel_expand<Real>(s, kx_N, kx_n)
               : q_kind(s)          ? kernel_expand<QRat>(s, kx_N, kx_n)
                                    : kernel_expand<BigRat>(s, kx_N, kx_n);
      if (g.format == "csv") {
        std::cout << "lambda,coeff\n";
        for (const auto& t : j["terms"])
          std::cout << "\"" << t["lambda"].dump() << "\"," << (t["coeff"].is_string() ? t["coeff"].get<std::string>() : t["coeff"].dump()) << "\n";
      } else {
        emit(j, g);
      }
    } else if (ke->parsed()) {
      auto s = ke_e.spec();
      if (static_cast<int>(split(ke_x).size()) != ke_n || static_cast<int>(split(ke_y).size()) != ke_n)
        throw CLI::ValidationError("--x and --y must each hold n values");
      json j;
      if (ke_e.field == "real")
        j["khat"] = to_json(kernel_eval(s, ke_N, points<Real>(ke_x), points<Real>(ke_y), ke_method));
      else if (q_kind(s))
        j["khat"] = to_json(kernel_eval(s, ke_N, points<QRat>(ke_x), points<QRat>(ke_y), ke_method));
      else
        j["khat"] = to_json(kernel_eval(s, ke_N, points<BigRat>(ke_x), points<BigRat>(ke_y), ke_method));
      emit(j, g);
    } else if (pc->parsed()) {
      ExpSeries f = pc_form == "schur" ? f2n_schur(pc_n, pc_m) : f2n_wronskian(pc_n, pc_m);
      json j;
      j["n"] = pc_n;
      j["M"] = pc_m;
      j["rate"] = rat_str(f.rate);
      j["poly"] = to_json(f.poly);
      json b = json::array();
      for (const auto& v : b_coeffs(pc_n, pc_m, pc_upto)) b.push_back(rat_str(v));
      j["b"] = b;
      j["b2_closed"] = rat_str(b2_closed(pc_n, pc_m));
      auto z = f2n_zero(pc_n, pc_m);
      j["f0_schur"] = rat_str(z.schur);
      j["f0_barnes"] = rat_str(z.barnes);
      emit(j, g);
    } else if (ti->parsed()) {
      json j;
      j["gamma"] = tg;
      j["delta"] = td;
      j["size"] = ts;
      j["inverse"] = to_json(t_method == "exact" ? toeplitz_inverse_exact(tg, td, ts) : toeplitz_inverse_closed(tg, td, ts));
      emit(j, g);
    } else if (tv->parsed()) {
      auto b = duduchava_roch_blocks(tg, td, ts);
      json j;
      j["gamma"] = tg;
      j["delta"] = td;
      j["size"] = ts;
      j["passed"] = b.equal;
      if (g.format == "json") {
        j["lhs"] = to_json(b.lhs);
        j["rhs"] = to_json(b.rhs);
      }
      emit(j, g);
      return b.equal ? 0 : 1;
    } else if (hk->parsed()) {
      HeatQuery h(parse_real(h_q), parse_real(h_xi), parse_real(h_eta), h_terms);
      Real s = heat_kernel_sum(h), c = heat_kernel_closed(h.q, h.xi, h.eta);
      json j;
      j["terms"] = h_terms ? h_terms : heat_auto_terms(h.q);
      j["sum"] = to_json(s);
      j["closed"] = to_json(c);
      j["abs_diff"] = to_json(Real(abs(s - c)));
      emit(j, g);
    } else if (vf->parsed()) {
      if (vf_list) {
        for (const auto& n : all_suites()) std::cout << n << "  " << suite_title(n) << "\n";
        return 0;
      }
      Global vg = g;
      if (app.get_option("--format")->count() == 0) vg.format = "table";
      return run_verify(vf_suite, vf_jobs, vg);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
