#include "treechol/kernels.hpp"

#include <cmath>

#include "treechol/errors.hpp"

namespace treechol {

void round_matrix(TileView tile, Precision level) {
    if (level == Precision::Double) return;
    for (int j = 0; j < tile.cols; ++j) {
        for (int i = 0; i < tile.rows; ++i) {
            tile.at(i, j) = round_to(tile.at(i, j), level);
        }
    }
}

namespace {

// One scalar of a GEMM-style update: beta*c + alpha*sum_t a_t*b_t. At Half
// the products are exact and the sum lives in `acc` (Single by default),
// with a single final round to Half; otherwise everything rounds to level.
template <typename Fa, typename Fb>
inline double dot_update(int k, Fa av, Fb bv, double alpha, double beta,
                         double c, Precision level, Precision acc) {
    const bool half = level == Precision::Half;
    double s = 0.0;
    for (int t = 0; t < k; ++t) {
        double p = round_to(av(t), level) * round_to(bv(t), level);
        if (!half) p = round_to(p, level);
        s = round_to(s + p, acc);
    }
    double r = round_to(alpha * s, acc);
    if (beta != 0.0) {
        r = round_to(r + round_to(beta * round_to(c, level), acc), acc);
    }
    return round_to(r, level);
}

}  // namespace

void potrf_leaf(TileView a, Precision level, const KernelContext& ctx) {
    const int n = a.rows;
    const Precision acc =
        level == Precision::Half ? ctx.half_accumulator : level;
    std::uint64_t fl = 0;
    // left-looking: each entry subtracts its full dot product in one
    // GEMM-style accumulation, then sqrt/divide round per operation
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            a.at(i, j) = dot_update(
                j, [&](int t) { return a.at(i, t); },
                [&](int t) { return a.at(j, t); }, -1.0, 1.0, a.at(i, j),
                level, acc);
        }
        fl += 2 * std::uint64_t(j) * std::uint64_t(n - j);
        const double piv = a.at(j, j);
        if (!std::isfinite(piv) || piv <= 0.0) {
            throw NotPositiveDefinite(a.row0 + j);
        }
        const double d = round_to(std::sqrt(piv), level);
        a.at(j, j) = d;
        for (int i = j + 1; i < n; ++i) {
            a.at(i, j) = round_to(a.at(i, j) / d, level);
        }
        fl += 1 + std::uint64_t(n - j - 1);  // sqrt + column scaling
    }
    if (ctx.flops) ctx.flops->add(level, Kernel::Potrf, fl);
}

void trsm_leaf(TileView b, TileView l, Precision level,
               const KernelContext& ctx) {
    const int m = b.rows, n = b.cols;
    const Precision acc =
        level == Precision::Half ? ctx.half_accumulator : level;
    std::uint64_t fl = 0;
    for (int j = 0; j < n; ++j) {
        const double ljj = round_to(l.at(j, j), level);
        if (ljj == 0.0 || !std::isfinite(ljj)) {
            throw SingularDiagonal(l.row0 + j);
        }
        for (int i = 0; i < m; ++i) {
            const double r = dot_update(
                j, [&](int t) { return b.at(i, t); },
                [&](int t) { return l.at(j, t); }, -1.0, 1.0, b.at(i, j),
                level, acc);
            b.at(i, j) = round_to(r / ljj, level);
        }
        fl += std::uint64_t(m) * (2 * std::uint64_t(j) + 1);
    }
    if (ctx.flops) ctx.flops->add(level, Kernel::Trsm, fl);
}

void syrk_leaf(TileView c, TileView a, double alpha, double beta,
               Precision level, const KernelContext& ctx) {
    const int n = c.rows, k = a.cols;
    const Precision acc =
        level == Precision::Half ? ctx.half_accumulator : level;
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            c.at(i, j) = dot_update(
                k, [&](int t) { return a.at(i, t); },
                [&](int t) { return a.at(j, t); }, alpha, beta, c.at(i, j),
                level, acc);
        }
    }
    if (ctx.flops) {
        ctx.flops->add(level, Kernel::Syrk,
                       std::uint64_t(n) * std::uint64_t(n + 1) *
                           std::uint64_t(k));
    }
}

void gemm_mixed(TileView c, TileView a, TileView b, double alpha, double beta,
                Precision level, const KernelContext& ctx) {
    const int m = c.rows, n = c.cols, k = a.cols;
    const Precision acc =
        level == Precision::Half ? ctx.half_accumulator : level;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            c.at(i, j) = dot_update(
                k, [&](int t) { return a.at(i, t); },
                [&](int t) { return b.at(j, t); }, alpha, beta, c.at(i, j),
                level, acc);
        }
    }
    if (ctx.flops) {
        ctx.flops->add(level, Kernel::Gemm,
                       2 * std::uint64_t(m) * std::uint64_t(n) *
                           std::uint64_t(k));
    }
}

}  // namespace treechol
