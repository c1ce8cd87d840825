#include "treechol/tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "treechol/errors.hpp"

namespace treechol {

namespace {

std::string block_desc(const TileView& v) {
    return "rows " + std::to_string(v.row0) + ".." +
           std::to_string(v.row0 + v.rows - 1) + ", cols " +
           std::to_string(v.col0) + ".." + std::to_string(v.col0 + v.cols - 1);
}

void require_finite(const TileView& v, bool lower_only, const char* what) {
    for (int j = 0; j < v.cols; ++j) {
        for (int i = lower_only ? j : 0; i < v.rows; ++i) {
            if (!std::isfinite(v.at(i, j))) {
                throw NumericalBreakdown(
                    std::string("non-finite value in ") + what + " block (" +
                    block_desc(v) + ") at element (" +
                    std::to_string(v.row0 + i) + ", " +
                    std::to_string(v.col0 + j) + ")");
            }
        }
    }
}

void round_lower(TileView v, Precision level) {
    if (level == Precision::Double) return;
    for (int j = 0; j < v.cols; ++j) {
        for (int i = j; i < v.rows; ++i) {
            v.at(i, j) = round_to(v.at(i, j), level);
        }
    }
}

PrecisionTreeNode build_node(TileView a, const PrecisionConfig& cfg, int b,
                             bool quantize, int depth) {
    PrecisionTreeNode node;
    node.block = a;
    node.depth = depth;
    if (a.rows <= b) {
        node.is_leaf = true;
        node.leaf_level = cfg.leaf();
        round_lower(a, node.leaf_level);  // input down-conversion
        return node;
    }
    const int n1 = a.rows / 2;
    const int n2 = a.rows - n1;
    node.n1 = n1;
    node.offdiag = a.sub(n1, 0, n2, n1);
    node.offdiag_level = cfg.at_depth(depth);
    // With quantization enabled the off-diagonal block is converted at its
    // quantization boundary in tree_potrf, once the scale is known.
    if (!quantize) round_matrix(node.offdiag, node.offdiag_level);
    node.diag1 = std::make_unique<PrecisionTreeNode>(
        build_node(a.sub(0, 0, n1, n1), cfg, b, quantize, depth + 1));
    node.diag2 = std::make_unique<PrecisionTreeNode>(
        build_node(a.sub(n1, n1, n2, n2), cfg, b, quantize, depth + 1));
    return node;
}

}  // namespace

PrecisionTreeNode build_tree(TileView a, const PrecisionConfig& config, int b,
                             bool quantize) {
    if (b < 1) throw InvalidArgument("leaf size must be >= 1");
    if (config.levels.empty()) throw InvalidArgument("empty precision config");
    if (a.rows < 1 || a.rows != a.cols) {
        throw InvalidArgument("tree requires a square matrix of order >= 1");
    }
    return build_node(a, config, b, quantize, 0);
}

double quantize_block(TileView b, Precision target) {
    double amax = 0.0;
    for (int j = 0; j < b.cols; ++j) {
        for (int i = 0; i < b.rows; ++i) {
            amax = std::max(amax, std::fabs(b.at(i, j)));
        }
    }
    double alpha = amax / range_max(target);
    if (!(alpha > 1.0)) alpha = 1.0;
    for (int j = 0; j < b.cols; ++j) {
        for (int i = 0; i < b.rows; ++i) {
            b.at(i, j) = round_to(b.at(i, j) / alpha, target);
        }
    }
    return alpha;
}

void dequantize_block(TileView b, double alpha, Precision level) {
    if (alpha == 1.0) return;
    for (int j = 0; j < b.cols; ++j) {
        for (int i = 0; i < b.rows; ++i) {
            b.at(i, j) = round_to(b.at(i, j) * alpha, level);
        }
    }
}

void tree_potrf(PrecisionTreeNode& node, const SolveOptions& opt) {
    if (node.is_leaf) {
        require_finite(node.block, /*lower_only=*/true, "diagonal");
        potrf_leaf(node.block, node.leaf_level, opt.kernel_ctx());
        return;
    }
    tree_potrf(*node.diag1, opt);

    require_finite(node.offdiag, false, "off-diagonal");
    double alpha = 1.0;
    if (opt.quantize) {
        alpha = quantize_block(node.offdiag, node.offdiag_level);
    }
    tree_trsm(node.offdiag, node.offdiag_level, *node.diag1, opt);
    dequantize_block(node.offdiag, alpha, node.offdiag_level);
    require_finite(node.offdiag, false, "off-diagonal");

    tree_syrk(*node.diag2, node.offdiag, -1.0, 1.0, node.offdiag_level, opt);
    tree_potrf(*node.diag2, opt);
}

void tree_trsm(TileView b, Precision p, const PrecisionTreeNode& l,
               const SolveOptions& opt) {
    if (l.is_leaf || std::min(b.rows, b.cols) <= opt.leaf_size) {
        trsm_leaf(b, l.block, p, opt.kernel_ctx());
        return;
    }
    TileView b1 = b.sub(0, 0, b.rows, l.n1);
    TileView b2 = b.sub(0, l.n1, b.rows, b.cols - l.n1);
    tree_trsm(b1, p, *l.diag1, opt);
    gemm_mixed(b2, b1, l.offdiag, -1.0, 1.0, p, opt.kernel_ctx());
    tree_trsm(b2, p, *l.diag2, opt);
}

void tree_syrk(PrecisionTreeNode& c, TileView a, double alpha, double beta,
               Precision p, const SolveOptions& opt) {
    if (c.is_leaf) {
        syrk_leaf(c.block, a, alpha, beta, c.leaf_level, opt.kernel_ctx());
        return;
    }
    TileView a1 = a.sub(0, 0, c.n1, a.cols);
    TileView a2 = a.sub(c.n1, 0, a.rows - c.n1, a.cols);
    tree_syrk(*c.diag1, a1, alpha, beta, p, opt);
    gemm_mixed(c.offdiag, a2, a1, alpha, beta, c.offdiag_level,
               opt.kernel_ctx());
    tree_syrk(*c.diag2, a2, alpha, beta, p, opt);
}

}  // namespace treechol
