#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybeforge/api.hpp"

namespace py = pybind11;
using namespace ybeforge;

namespace {

RunConfig make_config(int m, int n, int a, int b, const std::string& t, uint64_t seed,
                      bool no_cache) {
    RunConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.a = a;
    cfg.b = b;
    cfg.t = rat_parse(t);
    cfg.seed = seed;
    cfg.no_cache = no_cache;
    cfg.cache_dir = resolve_cache_dir("");
    cfg.normalize();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact R-matrix workbench for U_q[osp(m|n)]-invariant solutions of the graded "
              "Yang-Baxter equation";

    // translators run newest-first, so the base class goes first
    py::register_exception<forge_error>(m, "ForgeError");
    py::register_exception<usage_error>(m, "UsageError");
    py::register_exception<degenerate_error>(m, "DegenerateParameterError");
    py::register_exception<pole_error>(m, "PoleError");

    m.def(
        "bracket_json",
        [](long a, int sign, const std::string& t) {
            DeformParam dp(rat_parse(t));
            return ratfunc_json(bracket(a, sign, dp)).dump();
        },
        py::arg("a"), py::arg("sign"), py::arg("t") = "6/5",
        "the bracket (1 +- z q^a)/(z +- q^a) as a JSON rational function");

    m.def(
        "bracket_eval",
        [](long a, int sign, const std::string& z, const std::string& t) {
            DeformParam dp(rat_parse(t));
            return rat_str(bracket(a, sign, dp).eval(rat_parse(z)));
        },
        py::arg("a"), py::arg("sign"), py::arg("z"), py::arg("t") = "6/5");

    m.def(
        "casimir",
        [](int m_, int n_, const std::vector<std::string>& eps,
           const std::vector<std::string>& delta) {
            AlgebraSignature sig(m_, n_);
            Weight w(sig.h, sig.r);
            if ((int)eps.size() != sig.h || (int)delta.size() != sig.r)
                throw usage_error("weight has the wrong number of coefficients");
            for (size_t i = 0; i < eps.size(); ++i) w.eps[i] = rat_parse(eps[i]);
            for (size_t i = 0; i < delta.size(); ++i) w.delta[i] = rat_parse(delta[i]);
            return rat_str(casimir_eigenvalue(sig, w));
        },
        py::arg("m"), py::arg("n"), py::arg("eps"), py::arg("delta"),
        "Casimir eigenvalue (lambda, lambda + 2 rho)");

    m.def(
        "decompose_json",
        [](int m_, int n_, int a, int b) {
            RunConfig cfg = make_config(m_, n_, a, b, "6/5", 1, true);
            return cmd_decompose(cfg).dump();
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"));

    m.def(
        "tpg_dot",
        [](int m_, int n_, int a, int b) {
            AlgebraSignature sig(m_, n_);
            return emit_dot(build_extended_ttpg(sig, std::min(a, b), std::max(a, b)));
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"));

    m.def(
        "coefficients_json",
        [](int m_, int n_, int a, int b, const std::string& t) {
            AlgebraSignature sig(m_, n_);
            DeformParam dp(rat_parse(t));
            auto g = build_extended_ttpg(sig, std::min(a, b), std::max(a, b));
            return coefficients_json(solve_coefficients(g, dp)).dump();
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("t") = "6/5");

    m.def(
        "rmatrix_json",
        [](int m_, int n_, int a, int b, const std::string& t, bool no_cache) {
            RunConfig cfg = make_config(m_, n_, a, b, t, 1, no_cache);
            return cmd_rmatrix(cfg).dump();
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("t") = "6/5",
        py::arg("no_cache") = false);

    m.def(
        "verify_json",
        [](int m_, int n_, int a, int b, const std::string& t, const std::string& suite,
           uint64_t seed, bool perturb, bool no_cache) {
            RunConfig cfg = make_config(m_, n_, a, b, t, seed, no_cache);
            cfg.suite = suite;
            cfg.perturb = perturb;
            return cmd_verify(cfg).to_json().dump();
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("t") = "6/5",
        py::arg("suite") = "full", py::arg("seed") = 1, py::arg("perturb") = false,
        py::arg("no_cache") = false);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
