// Python extension module. Exact rationals cross the boundary as "p/q"
// strings; the package wrapper converts them to fractions.Fraction.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "stirling/asymptotics.hpp"
#include "stirling/errors.hpp"
#include "stirling/gammafn.hpp"
#include "stirling/presets.hpp"
#include "stirling/riordan.hpp"
#include "stirling/stirling_function.hpp"
#include "stirling/triangle.hpp"
#include "stirling/verify.hpp"

namespace py = pybind11;
using namespace stirling;

namespace {

ParameterTriple make_triple(const std::string& alpha, const std::string& beta,
                            const std::string& r) {
    return ParameterTriple{Rational::parse(alpha), Rational::parse(beta),
                           Rational::parse(r)};
}

std::vector<std::vector<std::string>> py_triangle(const std::string& alpha,
                                                  const std::string& beta,
                                                  const std::string& r, unsigned n_max,
                                                  const std::string& algo) {
    StirlingTriangle tri =
        build_triangle(algorithm_from_name(algo), n_max, make_triple(alpha, beta, r));
    std::vector<std::vector<std::string>> out;
    out.reserve(tri.rows.size());
    for (const auto& row : tri.rows) {
        std::vector<std::string> r_out;
        r_out.reserve(row.size());
        for (const auto& v : row) r_out.push_back(v.str());
        out.push_back(std::move(r_out));
    }
    return out;
}

std::vector<std::string> py_a_sequence(const std::string& alpha, const std::string& beta,
                                       const std::string& r, std::size_t terms) {
    std::vector<Rational> a = a_sequence(make_triple(alpha, beta, r), terms);
    std::vector<std::string> out;
    out.reserve(a.size());
    for (const auto& v : a) out.push_back(v.str());
    return out;
}

py::dict py_function(Complex gamma, Complex eta, const std::string& alpha,
                     const std::string& beta, const std::string& r, double eps,
                     double tol) {
    StirlingFunctionQuery q;
    q.gamma = gamma;
    q.eta = eta;
    q.triple = make_triple(alpha, beta, r);
    q.eps = eps;
    q.tol = tol;
    StirlingFunctionResult res = stirling_function(q);
    py::dict out;
    out["value"] = res.value;
    out["terms"] = res.terms;
    return out;
}

py::dict py_verify(const std::string& suite, const std::string& alpha,
                   const std::string& beta, const std::string& r, unsigned n) {
    ParameterTriple t = make_triple(alpha, beta, r);
    VerifyReport rep;
    if (suite == "pair-inverse") {
        rep = verify_pair_inverse(n, t);
    } else if (suite == "expansion") {
        rep = verify_expansion(
            n, t, {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-3, 2)});
    } else if (suite == "remark22" || suite == "difference-identity") {
        rep = verify_difference_identity(n, t);
    } else if (suite == "aseq-identity") {
        rep = verify_asequence_identity(t, kDefaultSeriesOrder);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    py::dict out;
    out["pass"] = rep.pass;
    out["counterexample"] = rep.counterexample;
    return out;
}

py::dict py_asym_study(unsigned n, const std::vector<unsigned long>& mu,
                       const std::string& alpha, const std::string& beta,
                       const std::string& r, double eps, unsigned m, bool central) {
    AsymErrorStudy study =
        asym_error_study(n, mu, make_triple(alpha, beta, r), eps, m, central);
    py::list rows;
    for (const auto& row : study.rows) {
        py::dict d;
        d["mu"] = row.mu;
        d["exact"] = row.exact_norm.str();
        d["estimate"] = row.estimate.str();
        d["rel_error"] = row.rel_error;
        rows.append(std::move(d));
    }
    py::dict out;
    out["rows"] = std::move(rows);
    out["monotone_decreasing"] = study.monotone_decreasing;
    return out;
}

py::list py_presets() {
    py::list out;
    for (const auto& p : preset_catalog()) {
        py::dict d;
        d["name"] = p.name;
        d["params"] = p.params;
        d["has_dual"] = p.has_dual;
        d["description"] = p.description;
        out.append(std::move(d));
    }
    return out;
}

py::dict py_preset_triple(const std::string& name,
                          const std::map<std::string, std::string>& params) {
    std::map<std::string, Rational> parsed;
    for (const auto& [k, v] : params) parsed[k] = Rational::parse(v);
    PresetTriple pt = preset_lookup(name, parsed);
    py::dict out;
    out["alpha"] = pt.triple.alpha.str();
    out["beta"] = pt.triple.beta.str();
    out["r"] = pt.triple.r.str();
    if (pt.dual) {
        py::dict d;
        d["alpha"] = pt.dual->alpha.str();
        d["beta"] = pt.dual->beta.str();
        d["r"] = pt.dual->r.str();
        out["dual"] = std::move(d);
    } else {
        out["dual"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "generalized Stirling numbers, functions and asymptotics";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<regime_error>(m, "RegimeError", PyExc_ValueError);
    py::register_exception<convergence_error>(m, "ConvergenceError",
                                              PyExc_ArithmeticError);
    py::register_exception<pole_error>(m, "PoleError", PyExc_ZeroDivisionError);

    m.def("triangle", &py_triangle, py::arg("alpha"), py::arg("beta"), py::arg("r"),
          py::arg("n_max"), py::arg("algo") = "recurrence",
          "Triangle S(n,k) for 0 <= k <= n <= n_max, entries as 'p/q' strings");
    m.def("a_sequence", &py_a_sequence, py::arg("alpha"), py::arg("beta"), py::arg("r"),
          py::arg("terms"), "Riordan A-sequence, entries as 'p/q' strings");
    m.def("stirling_function", &py_function, py::arg("gamma"), py::arg("eta"),
          py::arg("alpha"), py::arg("beta"), py::arg("r"), py::arg("eps") = 0.0,
          py::arg("tol") = 1e-12, "S(gamma, eta; eps) of complex order");
    m.def("verify", &py_verify, py::arg("suite"), py::arg("alpha"), py::arg("beta"),
          py::arg("r"), py::arg("n") = 8,
          "Run one verification suite; returns pass flag and counterexample");
    m.def("asym_study", &py_asym_study, py::arg("n"), py::arg("mu"), py::arg("alpha"),
          py::arg("beta"), py::arg("r"), py::arg("eps") = 0.0, py::arg("m") = 2,
          py::arg("central") = false,
          "Asymptotic estimate vs the exact recurrence oracle over a mu grid");
    m.def("presets", &py_presets, "Catalog of named parameter triples");
    m.def("preset_triple", &py_preset_triple, py::arg("name"),
          py::arg("params") = std::map<std::string, std::string>{},
          "Resolve a preset to its triple and dual");
    m.def(
        "k_gamma", [](Complex z, double k) { return k_gamma(z, k); }, py::arg("z"),
        py::arg("k"), "Gamma_k(z) = k^(z/k-1) Gamma(z/k)");
}
