#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ybeforge/api.hpp"

using namespace ybeforge;

namespace {

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw usage_error("cannot open output file " + path);
    out << text;
}

// a point list is either explicit rationals or the literal "random:<seed>",
// which switches that list to seeded sampling
std::vector<Rat> parse_points(const std::vector<std::string>& raw, uint64_t& seed) {
    std::vector<Rat> out;
    for (const auto& s : raw) {
        if (s.rfind("random:", 0) == 0) {
            seed = std::stoull(s.substr(7));
            return {};
        }
        out.push_back(rat_parse(s));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ybe-forge: exact R-matrix workbench for twisted quantum affine superalgebras"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    std::string t_str = "6/5";
    std::vector<std::string> z_str, w_str;
    std::string out_path;
    std::string cache_flag;

    app.add_option("--m", cfg.m, "even-sector size m");
    app.add_option("--n", cfg.n, "odd-sector size n (even, > 2)");
    app.add_option("--a", cfg.a, "first minimal module index");
    app.add_option("--b", cfg.b, "second minimal module index");
    app.add_option("--t", t_str, "deformation parameter t (q = t^2)");
    app.add_option("--z", z_str, "spectral point(s) as rationals");
    app.add_option("--w", w_str, "second spectral point(s) for the YBE");
    app.add_option("--seed", cfg.seed, "seed for sampled spectral points");
    app.add_option("--format", cfg.format, "json | dot | pretty");
    app.add_option("--out", out_path, "output file (stdout if omitted)");
    app.add_option("--suite", cfg.suite, "verify suite: full | jimbo | unitarity | ybe | oracle | structure");
    app.add_flag("--perturb", cfg.perturb, "perturb one R-matrix entry (negative control)");
    app.add_flag("--no-cache", cfg.no_cache, "bypass the R-matrix disk cache");
    app.add_option("--cache-dir", cache_flag, "cache directory (default YBE_FORGE_CACHE_DIR)");

    auto* cmd_dec = app.add_subcommand("decompose", "tensor product decomposition grid");
    auto* cmd_graph = app.add_subcommand("tpg", "extended twisted tensor product graph");
    auto* cmd_rmat = app.add_subcommand("rmatrix", "assemble the spectral R-matrix");
    auto* cmd_ver = app.add_subcommand("verify", "run exact verification checks");
    auto* cmd_gen = app.add_subcommand("generators", "dump a generator matrix of V(lambda_a)");
    std::string gen_label = "E1";
    cmd_gen->add_option("--gen", gen_label, "label E<i>, F<i>, H<i> or K<i>, i = 0..s");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        cfg.t = rat_parse(t_str);
        cfg.zs = parse_points(z_str, cfg.seed);
        cfg.ws = parse_points(w_str, cfg.seed);
        cfg.cache_dir = resolve_cache_dir(cache_flag);
        if (cmd_gen->parsed()) cfg.b = cfg.a;  // generators address one module
        cfg.normalize();

        if (cmd_dec->parsed()) {
            ojson g = cmd_decompose(cfg);
            write_out(out_path, cfg.format == "pretty" ? pretty_grid(g) : g.dump(1) + "\n");
            return kPass;
        }
        if (cmd_graph->parsed()) {
            write_out(out_path, cmd_tpg(cfg));
            return kPass;
        }
        if (cmd_rmat->parsed()) {
            write_out(out_path, cmd_rmatrix(cfg).dump(1) + "\n");
            return kPass;
        }
        if (cmd_ver->parsed()) {
            VerifyOutcome v = cmd_verify(cfg);
            write_out(out_path,
                      cfg.format == "pretty" ? pretty_reports(v) : v.to_json().dump(1) + "\n");
            return v.all_pass ? kPass : kVerifyFailure;
        }
        if (cmd_gen->parsed()) {
            write_out(out_path, cmd_generator(cfg, gen_label).dump(1) + "\n");
            return kPass;
        }
        throw usage_error("no subcommand");
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const degenerate_error& e) {
        std::cerr << "degenerate parameter: " << e.what() << "\n";
        return kDegenerateParameter;
    } catch (const pole_error& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return kDegenerateParameter;
    } catch (const forge_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailure;
    }
}
