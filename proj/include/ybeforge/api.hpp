#pragma once

#include "ybeforge/jsonio.hpp"

namespace ybeforge {

// Exit codes of the command surface.
enum ExitCode : int {
    kPass = 0,
    kVerifyFailure = 1,
    kUsageError = 2,
    kDegenerateParameter = 3,
};

struct RunConfig {
    int m = 2, n = 4, a = 1, b = 1;
    Rat t = Rat(6, 5);
    std::vector<Rat> zs, ws;   // explicit spectral points; sampled if empty
    uint64_t seed = 1;
    std::string format = "json";  // json | dot | pretty
    std::string suite = "full";   // full | jimbo | unitarity | ybe | oracle | structure
    bool perturb = false;
    bool no_cache = false;
    std::string cache_dir;  // resolved: flag > env YBE_FORGE_CACHE_DIR > default
    bool swapped_ab = false;

    AlgebraSignature signature() const { return AlgebraSignature(m, n); }
    DeformParam deform() const { return DeformParam(t); }

    // enforces a <= b, recording the swap
    void normalize();
};

std::string resolve_cache_dir(const std::string& flag_value);

// assemble with on-disk caching keyed (m, n, a, b, t)
SpectralRMatrix assemble_cached(int a, int b, const AlgebraSignature& sig, const DeformParam& dp,
                                const std::string& cache_dir, bool no_cache);

ojson cmd_decompose(const RunConfig& cfg);
std::string cmd_tpg(const RunConfig& cfg);       // dot or json text per format
ojson cmd_rmatrix(const RunConfig& cfg);

// generator matrix of the module V(lambda_a), addressed as "E3", "F0",
// "H2" or "K2" (K = q^{h/2}), in the matrix JSON format
ojson cmd_generator(const RunConfig& cfg, const std::string& label);

struct VerifyOutcome {
    std::vector<CheckReport> reports;
    bool all_pass = true;
    ojson to_json() const;
};
VerifyOutcome cmd_verify(const RunConfig& cfg);

// pretty-printers for format=pretty
std::string pretty_grid(const ojson& grid);
std::string pretty_reports(const VerifyOutcome& v);

}  // namespace ybeforge
