#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurk/heat.hpp"
#include "schurk/io.hpp"
#include "schurk/kernels.hpp"
#include "schurk/painleve.hpp"
#include "schurk/toeplitz.hpp"
#include "schurk/verify.hpp"

#ifndef SCHURK_VERSION
#define SCHURK_VERSION "0.1.0"
#endif

namespace py = pybind11;
using namespace schurk;

namespace {

py::object fraction(const BigRat& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(rat_str(r));
}

py::object to_py(const BigRat& r) { return fraction(r); }
py::object to_py(const QRat& r) { return py::str(r.str()); }
py::object to_py(const Real& r) { return py::str(real_str(r)); }

py::object from_json(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

bool q_kind(const EnsembleSpec& s) { return s.kind == Kind::SW || s.kind == Kind::qLUE; }

// accepts int, str, Fraction or float-as-decimal entries
template <class F>
std::vector<F> points(const py::sequence& s) {
  std::vector<F> out;
  for (auto v : s) {
    std::string t = py::str(v);
    if constexpr (std::is_same_v<F, Real>)
      out.push_back(parse_real(t));
    else
      out.push_back(F(parse_rat(t)));
  }
  return out;
}

template <class F>
py::object khat_in(const EnsembleSpec& s, int N, const py::sequence& xs, const py::sequence& ys, const std::string& method) {
  auto x = points<F>(xs), y = points<F>(ys);
  if (x.size() != y.size()) throw MathError("x and y need the same length");
  if (s.kind == Kind::Ginibre) {
    if (method != "schur") throw MathError("ginibre supports method 'schur' only here");
    return to_py(ginibre_khat_schur(N, x, y));
  }
  if (method == "schur") return to_py(khat_schur(s, N, x, y));
  if (method == "double") return to_py(khat_double(s, N, x, y));
  if (method == "cd") return to_py(khat_cd(s, N, x, y));
  throw MathError("unknown method '" + method + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schur-function expansions of random-matrix kernels";
  m.attr("__version__") = SCHURK_VERSION;
  py::register_exception<MathError>(m, "MathError", PyExc_ValueError);

  m.def("set_precision", [](unsigned d) { set_default_digits(d); }, py::arg("digits"),
        "Decimal digits for real-field evaluation.");
  m.def("precision", [] { return default_digits(); });

  m.def(
      "schur_avg",
      [](const std::string& ensemble, const std::vector<int>& partition, int M, const std::string& alpha,
         const std::string& beta, const std::string& q, const std::string& field, const std::string& method) {
        auto s = make_ensemble(ensemble, alpha, beta, q);
        Partition mu(partition);
        bool oracle = method == "oracle";
        if (!oracle && method != "closed") throw MathError("method must be 'closed' or 'oracle'");
        if (field == "real")
          return to_py(oracle ? schur_avg_oracle<Real>(s, mu, M) : schur_avg_closed<Real>(s, mu, M));
        if (field != "exact") throw MathError("field must be 'exact' or 'real'");
        if (q_kind(s)) return to_py(oracle ? schur_avg_oracle<QRat>(s, mu, M) : schur_avg_closed<QRat>(s, mu, M));
        return to_py(oracle ? schur_avg_oracle<BigRat>(s, mu, M) : schur_avg_closed<BigRat>(s, mu, M));
      },
      py::arg("ensemble"), py::arg("partition"), py::arg("m"), py::arg("alpha") = "0", py::arg("beta") = "0",
      py::arg("q") = "1/2", py::arg("field") = "exact", py::arg("method") = "closed",
      "Average of s_mu over the M-point ensemble.");

  m.def(
      "khat",
      [](const std::string& ensemble, int N, const py::sequence& x, const py::sequence& y, const std::string& alpha,
         const std::string& beta, const std::string& q, const std::string& field, const std::string& method) {
        auto s = make_ensemble(ensemble, alpha, beta, q);
        if (field == "real") return khat_in<Real>(s, N, x, y, method);
        if (q_kind(s)) return khat_in<QRat>(s, N, x, y, method);
        return khat_in<BigRat>(s, N, x, y, method);
      },
      py::arg("ensemble"), py::arg("N"), py::arg("x"), py::arg("y"), py::arg("alpha") = "0", py::arg("beta") = "0",
      py::arg("q") = "1/2", py::arg("field") = "exact", py::arg("method") = "schur",
      "Normalized n-point kernel average.");

  m.def(
      "f2n",
      [](int n, int M, const std::string& form) {
        ExpSeries f = form == "schur" ? f2n_schur(n, M) : f2n_wronskian(n, M);
        py::list poly;
        for (const auto& c : f.poly.coeffs()) poly.append(fraction(c));
        py::dict d;
        d["rate"] = fraction(f.rate);
        d["poly"] = poly;
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("form") = "wronskian",
      "exp(rate x) times poly(x), coefficients ascending.");
  m.def("b_coeffs", [](int n, int M, int upto) {
    py::list out;
    for (const auto& v : b_coeffs(n, M, upto)) out.append(fraction(v));
    return out;
  }, py::arg("n"), py::arg("m"), py::arg("upto") = 2);

  m.def(
      "toeplitz_inverse",
      [](int g, int d, int size, const std::string& method) {
        auto inv = method == "closed" ? toeplitz_inverse_closed(g, d, size) : toeplitz_inverse_exact(g, d, size);
        py::list rows;
        for (const auto& r : inv) {
          py::list row;
          for (const auto& v : r) row.append(fraction(v));
          rows.append(row);
        }
        return rows;
      },
      py::arg("gamma"), py::arg("delta"), py::arg("size"), py::arg("method") = "exact");
  m.def("duduchava_roch_check", &duduchava_roch_check, py::arg("gamma"), py::arg("delta"), py::arg("size"));

  m.def(
      "heat_kernel",
      [](const std::string& q, const std::string& xi, const std::string& eta, int terms) {
        HeatQuery h(parse_real(q), parse_real(xi), parse_real(eta), terms);
        py::dict d;
        d["terms"] = h.terms ? h.terms : heat_auto_terms(h.q);
        d["sum"] = real_str(heat_kernel_sum(h));
        d["closed"] = real_str(heat_kernel_closed(h.q, h.xi, h.eta));
        return d;
      },
      py::arg("q"), py::arg("xi"), py::arg("eta"), py::arg("terms") = 0);

  m.def("suites", [] { return all_suites(); });
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, unsigned jobs) {
        std::vector<SuiteResult> rs;
        {
          py::gil_scoped_release release;
          rs = run_suites(suite, {seed, jobs});
        }
        py::list out;
        for (const auto& r : rs) out.append(from_json(suite_json(r)));
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = VerifyOptions{}.seed, py::arg("jobs") = 1);
}
