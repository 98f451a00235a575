#include "ybeforge/api.hpp"
#include <chrono>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ybeforge {

namespace fs = std::filesystem;

void RunConfig::normalize() {
    AlgebraSignature check(m, n);  // validates the signature
    (void)check;
    DeformParam dcheck(t);  // rejects degenerate t up front
    (void)dcheck;
    if (a < 1 || b < 1) throw usage_error("need a >= 1 and b >= 1");
    if (a > b) {
        std::swap(a, b);
        swapped_ab = true;
    }
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("YBE_FORGE_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/ybe-forge";
    return ".ybe-forge-cache";
}

SpectralRMatrix assemble_cached(int a, int b, const AlgebraSignature& sig, const DeformParam& dp,
                                const std::string& cache_dir, bool no_cache) {
    std::string key = "rmatrix_m" + std::to_string(sig.m) + "_n" + std::to_string(sig.n) + "_a" +
                      std::to_string(a) + "_b" + std::to_string(b) + "_t";
    std::string tkey = rat_str(dp.t());
    for (auto& ch : tkey)
        if (ch == '/') ch = '_';
    if (!tkey.empty() && tkey[0] == '-') tkey[0] = 'm';
    key += tkey + ".json";
    fs::path path = fs::path(cache_dir) / key;
    if (!no_cache && fs::exists(path)) {
        std::ifstream in(path);
        ojson j = ojson::parse(in);
        return rmatrix_from_json(j);
    }
    SpectralRMatrix r = assemble(a, b, sig, dp);
    if (!no_cache) {
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        if (!ec) {
            std::ofstream out(path);
            out << rmatrix_json(r).dump(1) << "\n";
        }
    }
    return r;
}

ojson cmd_decompose(const RunConfig& cfg) {
    ojson j = grid_json(cfg.signature(), cfg.a, cfg.b);
    if (cfg.swapped_ab) j["swapped_ab"] = true;
    return j;
}

std::string cmd_tpg(const RunConfig& cfg) {
    auto g = build_extended_ttpg(cfg.signature(), cfg.a, cfg.b);
    if (cfg.format == "dot") return emit_dot(g);
    return tpg_json(g, cfg.deform()).dump(1) + "\n";
}

ojson cmd_rmatrix(const RunConfig& cfg) {
    AlgebraSignature sig = cfg.signature();
    DeformParam dp = cfg.deform();
    SpectralRMatrix r = assemble_cached(cfg.a, cfg.b, sig, dp, cfg.cache_dir, cfg.no_cache);
    ojson j = rmatrix_json(r);
    if (cfg.swapped_ab) j["meta"]["swapped_ab"] = true;
    if (!cfg.zs.empty()) {
        ojson evals = ojson::array();
        for (const auto& z : cfg.zs) {
            ojson e;
            e["z"] = rat_str(z);
            e["matrix"] = matrix_json(r.eval(z), r.cod.parity, r.dom.parity);
            evals.push_back(std::move(e));
        }
        j["evaluations"] = std::move(evals);
    }
    return j;
}

ojson cmd_generator(const RunConfig& cfg, const std::string& label) {
    if (label.size() < 2) throw usage_error("generator label must look like E3, F0, H2 or K2");
    char kind = (char)std::toupper((unsigned char)label[0]);
    int idx;
    try {
        idx = std::stoi(label.substr(1));
    } catch (...) {
        throw usage_error("bad generator index in " + label);
    }
    AlgebraSignature sig = cfg.signature();
    DeformParam dp = cfg.deform();
    if (idx < 0 || idx > sig.s) throw usage_error("generator index out of range 0..s");
    Representation rep = fuse_minimal(cfg.a, sig, dp);
    RatMat m;
    switch (kind) {
        case 'E': m = rep.e[idx]; break;
        case 'F': m = rep.f[idx]; break;
        case 'H': {
            m = RatMat(rep.dim(), rep.dim());
            for (int p = 0; p < rep.dim(); ++p) m.at(p, p) = rep.hdiag[idx][p];
            break;
        }
        case 'K': m = rep.hhalf[idx]; break;
        default: throw usage_error("generator kind must be E, F, H or K");
    }
    ojson j;
    j["module"] = rep.label;
    j["m"] = sig.m;
    j["n"] = sig.n;
    j["a"] = cfg.a;
    j["t"] = rat_str(dp.t());
    j["generator"] = std::string(1, kind) + std::to_string(idx);
    j["matrix"] = matrix_json(m, rep.space.parity, rep.space.parity);
    return j;
}

namespace {

// seeded spectral points rejecting poles of the given R-matrices (and of
// their argument-inverses)
std::vector<Rat> sample_points(const RunConfig& cfg, const std::vector<const SpectralRMatrix*>& rs,
                               size_t count) {
    RationalSampler sampler(cfg.seed);
    std::vector<Rat> out;
    int guard = 0;
    while (out.size() < count && guard < 10000) {
        ++guard;
        Rat z = sampler.next();
        Rat zi = Rat(1) / z;
        zi.canonicalize();
        bool ok = true;
        for (const auto* r : rs) {
            for (const auto& term : r->terms)
                ok = ok && !term.rho.is_pole(z) && !term.rho.is_pole(zi);
            if (r->indecomposable) {
                ok = ok && !r->rho_V.is_pole(z) && !r->rho_V.is_pole(zi);
                ok = ok && !r->rho_N.is_pole(z) && !r->rho_N.is_pole(zi);
            }
        }
        if (ok) out.push_back(z);
    }
    if (out.size() < count) throw forge_error("failed to sample non-degenerate spectral points");
    return out;
}

}  // namespace

ojson VerifyOutcome::to_json() const {
    ojson j;
    j["reports"] = report_json(reports);
    j["all_pass"] = all_pass;
    return j;
}

VerifyOutcome cmd_verify(const RunConfig& cfg) {
    AlgebraSignature sig = cfg.signature();
    DeformParam dp = cfg.deform();
    genericity_guard(sig, cfg.a, cfg.b, dp);

    VerifyOutcome out;
    SpectralRMatrix Rab = assemble_cached(cfg.a, cfg.b, sig, dp, cfg.cache_dir, cfg.no_cache);
    SpectralRMatrix Rba =
        cfg.a == cfg.b ? Rab : assemble_cached(cfg.b, cfg.a, sig, dp, cfg.cache_dir, cfg.no_cache);
    if (cfg.perturb) {
        Rab.terms.at(0).P.at(0, Rab.dim() - 1) += 1;
    }
    Representation A = fuse_minimal(cfg.a, sig, dp);
    Representation B = fuse_minimal(cfg.b, sig, dp);
    TensorRep tAB = coproduct_rep(A, B);
    TensorRep tBA = coproduct_rep(B, A);

    std::vector<Rat> zs = cfg.zs.empty() ? sample_points(cfg, {&Rab, &Rba}, 3) : cfg.zs;
    std::vector<Rat> ws = cfg.ws.empty() ? sample_points(cfg, {&Rab, &Rba}, 3) : cfg.ws;

    auto want = [&](const std::string& name) { return cfg.suite == "full" || cfg.suite == name; };
    auto push = [&](CheckReport rep) {
        rep.params["seed"] = std::to_string(cfg.seed);
        out.all_pass = out.all_pass && rep.pass;
        out.reports.push_back(std::move(rep));
    };

    if (want("jimbo")) {
        for (const auto& z : zs) push(check_jimbo(Rab, tAB, tBA, z));
    }
    if (want("unitarity")) {
        for (const auto& z : zs) push(check_unitarity(Rab, Rba, z));
        if (cfg.a != cfg.b)
            for (const auto& z : zs) push(check_unitarity(Rba, Rab, z));
    }
    if (want("ybe") && cfg.a == cfg.b) {
        for (size_t i = 0; i < zs.size() && i < ws.size(); ++i)
            push(check_graded_ybe(Rab, zs[i], ws[i]));
    }
    if (want("oracle")) {
        for (const auto& z : zs) {
            CheckReport rep;
            rep.name = "oracle_agreement";
            rep.params = {{"m", std::to_string(sig.m)}, {"n", std::to_string(sig.n)},
                          {"a", std::to_string(cfg.a)}, {"b", std::to_string(cfg.b)},
                          {"t", rat_str(dp.t())},       {"z", rat_str(z)}};
            auto t0 = std::chrono::steady_clock::now();
            RatMat X = solve_jimbo_direct(tAB, tBA, z);
            RatMat diff = X - Rab.eval(z);
            rep.pass = diff.is_zero();
            rep.residual = rep.pass ? "0" : diff.max_abs_numerator().get_str();
            rep.runtime_ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            push(std::move(rep));
        }
    }
    if (want("structure")) {
        auto g = build_extended_ttpg(sig, std::min(cfg.a, cfg.b), std::max(cfg.a, cfg.b));
        ProjectorFamily fam = projectors(tAB, g);
        push(composition_series_check(tAB, fam));
        CheckReport rep;
        rep.name = "commutant_dimension";
        rep.params = {{"m", std::to_string(sig.m)}, {"n", std::to_string(sig.n)},
                      {"a", std::to_string(cfg.a)}, {"b", std::to_string(cfg.b)}};
        auto t0 = std::chrono::steady_clock::now();
        int full = commutant_dimension(tAB);
        int expect = (int)fam.P.size() + (fam.indecomposable ? 2 : 0);
        rep.params["dimension"] = std::to_string(full);
        rep.pass = full == expect;
        rep.residual = rep.pass ? "0" : "1";
        rep.runtime_ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        push(std::move(rep));
        if (fam.indecomposable) {
            CheckReport vb;
            vb.name = "vblock_commutant";
            vb.params = rep.params;
            int dimv = commutant_dimension(tAB, &fam.P_V);
            vb.params["dimension"] = std::to_string(dimv);
            vb.pass = dimv == 2;
            vb.residual = vb.pass ? "0" : "1";
            push(std::move(vb));
        }
    }
    return out;
}

std::string pretty_grid(const ojson& grid) {
    std::ostringstream os;
    os << "V(lambda_" << grid.at("a").get<int>() << ") (x) V(lambda_" << grid.at("b").get<int>()
       << ") at (m,n) = (" << grid.at("m").get<int>() << "," << grid.at("n").get<int>() << ")\n";
    for (const auto& n : grid.at("nodes")) {
        os << "  (" << n.at("node").get<std::string>() << ")  weight ";
        const auto& w = n.at("weight");
        os << "eps[";
        for (const auto& x : w.at("eps")) os << x.get<std::string>() << " ";
        os << "] delta[";
        for (const auto& x : w.at("delta")) os << x.get<std::string>() << " ";
        os << "]  C = " << n.at("casimir").get<std::string>() << "  parity "
           << n.at("parity").get<std::string>();
        if (n.at("indecomposable_member").get<bool>()) os << "  [indecomposable]";
        os << "\n";
    }
    return os.str();
}

std::string pretty_reports(const VerifyOutcome& v) {
    std::ostringstream os;
    for (const auto& r : v.reports) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        for (const auto& [k, val] : r.params) os << " " << k << "=" << val;
        os << "  residual=" << r.residual << "  (" << r.runtime_ms << " ms)\n";
    }
    os << (v.all_pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace ybeforge
