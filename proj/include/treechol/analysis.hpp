#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "treechol/flops.hpp"
#include "treechol/matrix.hpp"
#include "treechol/precision.hpp"

namespace treechol {

// One factorization run: inputs, outcome, accuracy and work distribution.
struct FactorReport {
    int n = 0;
    std::string config;
    int b = 0;
    bool quantize = true;
    std::uint64_t seed = 0;
    std::string status;  // ok | not-positive-definite | numerical-breakdown
    std::string detail;  // diagnostic text for failed runs
    double rel_error = std::numeric_limits<double>::quiet_NaN();
    double digits = std::numeric_limits<double>::quiet_NaN();
    FlopBreakdown flops;
    double wall_ms = 0.0;
};

// Dense SPD test matrix: symmetrized uniform[0,1) entries with n added to
// the diagonal (Gershgorin then gives lambda_min >= 1). Deterministic per
// (n, seed): mt19937_64 with entries (next() >> 11) * 2^-53, drawn
// column-major for the full square, then A = (R + R^T)/2.
Matrix spd_generate(int n, std::uint64_t seed);

// ||A - L L^T||_F / ||A||_F over the symmetric matrix, computed in double.
// Only the lower triangle of `lfac` is read. NaN if either input holds
// non-finite values.
double factorization_error(const Matrix& a, const Matrix& lfac);

// Static unfolding of the recursion: standard flop counts per leaf kernel
// and GEMM, attributed to the precision each block executes at. No numerics
// run, so arbitrary n is instant. The total is always
// n^3/3 + n^2/2 + n/6 = n(n+1)(2n+1)/6, independent of b and config.
FlopBreakdown flop_breakdown(int n, int b, const PrecisionConfig& config);

// Copy A (the one permitted copy, outside the solver), factorize the copy
// in place, and measure. Failures land in status/detail, never throw.
FactorReport factor_matrix(const Matrix& a, const PrecisionConfig& config,
                           int b, bool quantize = true);

// One report per (n, config, seed), n-major, config order as given, then
// seed. Per-run failures are recorded in the report status.
std::vector<FactorReport> accuracy_sweep(
    const std::vector<int>& sizes, const std::vector<PrecisionConfig>& configs,
    int b, const std::vector<std::uint64_t>& seeds, bool quantize = true);

}  // namespace treechol
