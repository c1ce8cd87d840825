#pragma once

#include "treechol/flops.hpp"
#include "treechol/matrix.hpp"
#include "treechol/precision.hpp"

namespace treechol {

// Shared kernel knobs. GEMM-style accumulations at Half keep exact products
// and accumulate in `half_accumulator` (MXU default: Single), rounding to
// Half once at the end.
struct KernelContext {
    FlopBreakdown* flops = nullptr;
    Precision half_accumulator = Precision::Single;
};

// Unblocked Cholesky of the lower triangle of `a`, in place. Every scalar
// result is rounded to `level`. The strictly upper triangle is neither read
// nor written. Throws NotPositiveDefinite with the global row index.
void potrf_leaf(TileView a, Precision level, const KernelContext& ctx = {});

// B <- B * L^-T by column substitution, in place on `b`. L is read through
// `level` (higher-precision factors are converted on the fly); every scalar
// result is rounded to `level`. Throws SingularDiagonal.
void trsm_leaf(TileView b, TileView l, Precision level,
               const KernelContext& ctx = {});

// Lower triangle of C <- beta*C + alpha*A*A^T. Accumulation follows the
// GEMM contract. beta == 0 means C is not read.
void syrk_leaf(TileView c, TileView a, double alpha, double beta,
               Precision level, const KernelContext& ctx = {});

// C <- beta*C + alpha*A*B^T. At Half: inputs rounded to Half, products
// exact, accumulation in the configured accumulator, one final round to
// Half. At Single/Double everything is rounded to `level`.
void gemm_mixed(TileView c, TileView a, TileView b, double alpha, double beta,
                Precision level, const KernelContext& ctx = {});

// Round every element of `tile` to `level`, in place.
void round_matrix(TileView tile, Precision level);

}  // namespace treechol
