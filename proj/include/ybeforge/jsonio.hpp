#pragma once

#include <nlohmann/json.hpp>

#include "ybeforge/tpg.hpp"
#include "ybeforge/verify.hpp"

namespace ybeforge {

// ordered_json everywhere: identical inputs must produce byte-identical
// artifacts
using ojson = nlohmann::ordered_json;

ojson ratfunc_json(const RatFunc& f);
RatFunc ratfunc_from_json(const ojson& j);

// {"rows":R,"cols":C,"parity_row":[...],"parity_col":[...],
//  "entries":[[r,c,"p/q"],...]} with zero entries omitted
ojson matrix_json(const RatMat& m, const std::vector<int>& parity_row,
                  const std::vector<int>& parity_col);
RatMat matrix_from_json(const ojson& j);

ojson weight_json(const Weight& w);
Weight weight_from_json(const ojson& j);

ojson space_json(const GradedSpace& s);
GradedSpace space_from_json(const ojson& j);

ojson grid_json(const AlgebraSignature& sig, int a, int b);
ojson tpg_json(const TwistedTPG& g, const DeformParam& dp);
ojson coefficients_json(const std::map<NodeKey, RatFunc>& rho);

ojson rmatrix_json(const SpectralRMatrix& r);
SpectralRMatrix rmatrix_from_json(const ojson& j);

ojson report_json(const std::vector<CheckReport>& reports);

}  // namespace ybeforge
