#include "ybeforge/jsonio.hpp"

namespace ybeforge {

namespace {

ojson poly_json(const Poly& p) {
    ojson arr = ojson::array();
    for (const auto& c : p.c) arr.push_back(rat_str(c));
    return arr;
}

Poly poly_from_json(const ojson& j) {
    std::vector<Rat> c;
    for (const auto& x : j) c.push_back(rat_parse(x.get<std::string>()));
    return Poly(std::move(c));
}

std::string node_str(const NodeKey& n) {
    return std::to_string(n.first) + "," + std::to_string(n.second);
}

NodeKey node_parse(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw usage_error("bad node key: " + s);
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

}  // namespace

ojson ratfunc_json(const RatFunc& f) {
    return ojson{{"num", poly_json(f.num)}, {"den", poly_json(f.den)}};
}

RatFunc ratfunc_from_json(const ojson& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

ojson matrix_json(const RatMat& m, const std::vector<int>& parity_row,
                  const std::vector<int>& parity_col) {
    ojson j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["parity_row"] = parity_row;
    j["parity_col"] = parity_col;
    ojson entries = ojson::array();
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0) entries.push_back(ojson::array({r, c, rat_str(m.at(r, c))}));
    j["entries"] = std::move(entries);
    return j;
}

RatMat matrix_from_json(const ojson& j) {
    RatMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries"))
        m.at(e.at(0).get<int>(), e.at(1).get<int>()) = rat_parse(e.at(2).get<std::string>());
    return m;
}

ojson weight_json(const Weight& w) {
    ojson eps = ojson::array(), delta = ojson::array();
    for (const auto& x : w.eps) eps.push_back(rat_str(x));
    for (const auto& x : w.delta) delta.push_back(rat_str(x));
    return ojson{{"eps", eps}, {"delta", delta}};
}

Weight weight_from_json(const ojson& j) {
    Weight w;
    for (const auto& x : j.at("eps")) w.eps.push_back(rat_parse(x.get<std::string>()));
    for (const auto& x : j.at("delta")) w.delta.push_back(rat_parse(x.get<std::string>()));
    return w;
}

ojson space_json(const GradedSpace& s) {
    ojson j;
    j["parity"] = s.parity;
    ojson wts = ojson::array();
    for (const auto& w : s.weights) wts.push_back(weight_json(w));
    j["weights"] = std::move(wts);
    return j;
}

GradedSpace space_from_json(const ojson& j) {
    GradedSpace s;
    s.parity = j.at("parity").get<std::vector<int>>();
    for (const auto& w : j.at("weights")) s.weights.push_back(weight_from_json(w));
    return s;
}

ojson grid_json(const AlgebraSignature& sig, int a, int b) {
    auto nodes = decomposition_grid(sig, a, b);
    ojson j;
    j["m"] = sig.m;
    j["n"] = sig.n;
    j["a"] = a;
    j["b"] = b;
    ojson arr = ojson::array();
    bool indecomposable = false;
    for (const auto& n : nodes) {
        ojson nj;
        nj["node"] = node_str({n.c, n.k});
        nj["weight"] = weight_json(n.weight);
        nj["casimir"] = rat_str(n.casimir);
        nj["parity"] = n.parity_class ? "-" : "+";
        nj["indecomposable_member"] = n.indecomposable_member;
        indecomposable = indecomposable || n.indecomposable_member;
        arr.push_back(std::move(nj));
    }
    j["nodes"] = std::move(arr);
    j["indecomposable"] = indecomposable;
    return j;
}

ojson tpg_json(const TwistedTPG& g, const DeformParam& dp) {
    ojson j = grid_json(g.sig, g.a, g.b);
    ojson edges = ojson::array();
    for (const auto& e : g.edges)
        edges.push_back(ojson{{"from", node_str(e.from)}, {"to", node_str(e.to)}, {"sign", e.sign}});
    for (const auto& e : g.vnode_edges)
        edges.push_back(
            ojson{{"from", "V"}, {"to", node_str(e.to)}, {"sign", e.sign}});
    j["edges"] = std::move(edges);
    j["coefficients"] = coefficients_json(solve_coefficients(g, dp));
    return j;
}

ojson coefficients_json(const std::map<NodeKey, RatFunc>& rho) {
    ojson j;
    for (const auto& [node, f] : rho) j[node_str(node)] = ratfunc_json(f);
    return j;
}

ojson rmatrix_json(const SpectralRMatrix& r) {
    ojson meta;
    meta["m"] = r.sig.m;
    meta["n"] = r.sig.n;
    meta["a"] = r.a;
    meta["b"] = r.b;
    meta["t"] = rat_str(r.tparam);
    meta["indecomposable"] = r.indecomposable;
    ojson j;
    j["meta"] = std::move(meta);
    j["fac_a"] = space_json(r.fac_a);
    j["fac_b"] = space_json(r.fac_b);
    ojson terms = ojson::array();
    std::vector<int> prow(r.cod.parity), pcol(r.dom.parity);
    for (const auto& term : r.terms) {
        ojson tj;
        tj["node"] = node_str(term.node);
        tj["rho"] = ratfunc_json(term.rho);
        tj["P"] = matrix_json(term.P, prow, pcol);
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    if (r.indecomposable) {
        j["V"] = ojson{{"rho", ratfunc_json(r.rho_V)},
                       {"P", matrix_json(r.P_V, prow, pcol)},
                       {"value_at_0", rat_str(r.rho_v0_value)},
                       {"value_at_0_formula", rat_str(r.rho_v0_formula)}};
        j["N"] = ojson{{"rho", ratfunc_json(r.rho_N)},
                       {"N", matrix_json(r.N, prow, pcol)},
                       {"const_fit", rat_str(r.n_const_fit)},
                       {"const_formula", rat_str(r.n_const_formula)}};
    }
    return j;
}

SpectralRMatrix rmatrix_from_json(const ojson& j) {
    SpectralRMatrix r;
    const auto& meta = j.at("meta");
    r.sig = AlgebraSignature(meta.at("m").get<int>(), meta.at("n").get<int>());
    r.a = meta.at("a").get<int>();
    r.b = meta.at("b").get<int>();
    r.tparam = rat_parse(meta.at("t").get<std::string>());
    r.indecomposable = meta.at("indecomposable").get<bool>();
    r.fac_a = space_from_json(j.at("fac_a"));
    r.fac_b = space_from_json(j.at("fac_b"));
    r.dom = tensor_space(r.fac_a, r.fac_b);
    r.cod = tensor_space(r.fac_b, r.fac_a);
    for (const auto& tj : j.at("terms")) {
        SpectralTerm term;
        term.node = node_parse(tj.at("node").get<std::string>());
        term.rho = ratfunc_from_json(tj.at("rho"));
        term.P = matrix_from_json(tj.at("P"));
        r.terms.push_back(std::move(term));
    }
    if (r.indecomposable) {
        r.rho_V = ratfunc_from_json(j.at("V").at("rho"));
        r.P_V = matrix_from_json(j.at("V").at("P"));
        r.rho_v0_value = rat_parse(j.at("V").at("value_at_0").get<std::string>());
        r.rho_v0_formula = rat_parse(j.at("V").at("value_at_0_formula").get<std::string>());
        r.rho_N = ratfunc_from_json(j.at("N").at("rho"));
        r.N = matrix_from_json(j.at("N").at("N"));
        r.n_const_fit = rat_parse(j.at("N").at("const_fit").get<std::string>());
        r.n_const_formula = rat_parse(j.at("N").at("const_formula").get<std::string>());
    }
    return r;
}

ojson report_json(const std::vector<CheckReport>& reports) {
    ojson arr = ojson::array();
    for (const auto& r : reports) {
        ojson j;
        j["name"] = r.name;
        ojson params;
        for (const auto& [k, v] : r.params) params[k] = v;
        j["params"] = std::move(params);
        j["residual"] = r.residual;
        j["pass"] = r.pass;
        j["runtime_ms"] = r.runtime_ms;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace ybeforge
