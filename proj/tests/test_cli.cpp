#include <filesystem>

#include "doctest.h"
#include "ybeforge/api.hpp"

using namespace ybeforge;

TEST_CASE("decompose command output is byte-identical across runs") {
    RunConfig cfg;
    cfg.m = 2;
    cfg.n = 4;
    cfg.a = 1;
    cfg.b = 1;
    cfg.normalize();
    CHECK(cmd_decompose(cfg).dump() == cmd_decompose(cfg).dump());
    cfg.format = "dot";
    CHECK(cmd_tpg(cfg) == cmd_tpg(cfg));
}

TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.a = 0;
    CHECK_THROWS_AS(cfg.normalize(), usage_error);
    RunConfig swap;
    swap.a = 2;
    swap.b = 1;
    swap.normalize();
    CHECK(swap.a == 1);
    CHECK(swap.b == 2);
    CHECK(swap.swapped_ab);
    RunConfig badsig;
    badsig.m = 5;
    badsig.n = 4;
    CHECK_THROWS_AS(badsig.normalize(), usage_error);
}

TEST_CASE("R-matrix JSON round trip preserves evaluations") {
    AlgebraSignature sig(2, 4);
    DeformParam dp;
    SpectralRMatrix R = assemble(1, 1, sig, dp);
    ojson j = rmatrix_json(R);
    SpectralRMatrix back = rmatrix_from_json(j);
    for (const Rat& z : {rat(5, 3), rat(-7, 4)}) CHECK(R.eval(z) == back.eval(z));
    CHECK(rmatrix_json(back).dump() == j.dump());
}

TEST_CASE("assemble cache stores and reloads the documented JSON") {
    namespace fs = std::filesystem;
    AlgebraSignature sig(2, 4);
    DeformParam dp;
    fs::path dir = fs::temp_directory_path() / "ybeforge_cache_test";
    fs::remove_all(dir);
    SpectralRMatrix fresh = assemble_cached(1, 1, sig, dp, dir.string(), false);
    CHECK(fs::exists(dir));
    bool have_file = false;
    for (const auto& e : fs::directory_iterator(dir)) have_file = have_file || e.is_regular_file();
    CHECK(have_file);
    SpectralRMatrix reloaded = assemble_cached(1, 1, sig, dp, dir.string(), false);
    CHECK(fresh.eval(rat(5, 3)) == reloaded.eval(rat(5, 3)));
    fs::remove_all(dir);
}

TEST_CASE("evaluation at a coefficient pole names the offending factor") {
    AlgebraSignature sig(2, 4);
    DeformParam dp;
    SpectralRMatrix R = assemble(1, 1, sig, dp);
    Rat pole = dp.q_pow(-2);  // pole of <-2>_-
    CHECK_THROWS_AS(R.eval(pole), pole_error);
    try {
        R.eval(pole);
    } catch (const pole_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("node") != std::string::npos);
    }
}

TEST_CASE("verify with explicit spectral points and perturbation") {
    RunConfig cfg;
    cfg.m = 2;
    cfg.n = 4;
    cfg.a = 1;
    cfg.b = 1;
    cfg.suite = "jimbo";
    cfg.no_cache = true;
    cfg.zs = {rat(5, 3)};
    cfg.normalize();
    VerifyOutcome good = cmd_verify(cfg);
    CHECK(good.all_pass);
    cfg.perturb = true;
    VerifyOutcome bad = cmd_verify(cfg);
    CHECK_FALSE(bad.all_pass);
}

TEST_CASE("structure suite covers the indecomposable case") {
    RunConfig cfg;
    cfg.m = 4;
    cfg.n = 4;
    cfg.a = 1;
    cfg.b = 1;
    cfg.suite = "structure";
    cfg.no_cache = true;
    cfg.normalize();
    VerifyOutcome out = cmd_verify(cfg);
    CHECK(out.all_pass);
    bool saw_series = false, saw_vblock = false;
    for (const auto& r : out.reports) {
        saw_series = saw_series || r.name == "composition_series";
        saw_vblock = saw_vblock || r.name == "vblock_commutant";
    }
    CHECK(saw_series);
    CHECK(saw_vblock);
}
