#pragma once

#include <memory>

#include "treechol/kernels.hpp"
#include "treechol/matrix.hpp"
#include "treechol/precision.hpp"

namespace treechol {

// Recursive partition of a symmetric matrix into (diag1, off-diagonal,
// diag2) with a precision per level. Nodes hold views into the one shared
// buffer; no numeric data is ever copied.
struct PrecisionTreeNode {
    TileView block;  // the full square region this node covers
    int depth = 0;
    bool is_leaf = false;
    Precision leaf_level = Precision::Double;  // valid for leaves

    // split fields: block = [[diag1, .], [offdiag, diag2]]
    int n1 = 0;
    TileView offdiag{};  // (n - n1) x n1
    Precision offdiag_level = Precision::Double;
    std::unique_ptr<PrecisionTreeNode> diag1;
    std::unique_ptr<PrecisionTreeNode> diag2;
};

struct SolveOptions {
    int leaf_size = 64;  // must match the b the tree was built with
    bool quantize = true;
    FlopBreakdown* flops = nullptr;
    Precision half_accumulator = Precision::Single;

    KernelContext kernel_ctx() const { return {flops, half_accumulator}; }
};

// Build the partition tree over `a` (n1 = floor(n/2) at every split,
// recursion stops at n <= b). Diagonal leaf tiles are rounded to the leaf
// precision here; off-diagonal blocks are down-converted later, at their
// quantization boundary inside tree_potrf -- except with quantize == false,
// where they are rounded plainly at build time (overflow and all).
PrecisionTreeNode build_tree(TileView a, const PrecisionConfig& config, int b,
                             bool quantize = true);

// alpha = max(1, max|B| / range_max(target)); divides B by alpha and rounds
// it to `target`, in place. Returns alpha (1 for an all-zero block).
double quantize_block(TileView b, Precision target);

// Multiply every element by alpha, rounding in the block's format.
void dequantize_block(TileView b, double alpha, Precision level);

// Nested-recursive Cholesky (lower) over the precision tree, strictly in
// place. Throws NotPositiveDefinite for indefinite pivots and
// NumericalBreakdown when a block turns non-finite mid-factorization.
void tree_potrf(PrecisionTreeNode& node, const SolveOptions& opt);

// B <- B * L^-T where L is an already-factorized subtree; B executes at
// level p throughout, higher-precision L blocks are converted on read.
void tree_trsm(TileView b, Precision p, const PrecisionTreeNode& l,
               const SolveOptions& opt);

// Recursive SYRK over the trailing subtree: leaves via syrk_leaf at their
// own precision, off-diagonal contributions via gemm_mixed at the
// destination block's precision. A resides at level p.
void tree_syrk(PrecisionTreeNode& c, TileView a, double alpha, double beta,
               Precision p, const SolveOptions& opt);

}  // namespace treechol
