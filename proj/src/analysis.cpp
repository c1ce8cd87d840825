#include "treechol/analysis.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "treechol/errors.hpp"
#include "treechol/tree.hpp"

namespace treechol {

Matrix spd_generate(int n, std::uint64_t seed) {
    Matrix r(n, n);
    std::mt19937_64 rng(seed);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            r.at(i, j) = double(rng() >> 11) * 0x1p-53;  // uniform [0, 1)
        }
    }
    Matrix a(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            a.at(i, j) = 0.5 * (r.at(i, j) + r.at(j, i));
        }
        a.at(j, j) += double(n);
    }
    return a;
}

double factorization_error(const Matrix& a, const Matrix& lfac) {
    const int n = a.rows();
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            if (!std::isfinite(a.at(i, j)) || !std::isfinite(lfac.at(i, j))) {
                return std::numeric_limits<double>::quiet_NaN();
            }
        }
    }
    // E = lower(A) - lower(L L^T), column-oriented for locality
    Matrix e(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) e.at(i, j) = a.at(i, j);
    }
    for (int k = 0; k < n; ++k) {
        for (int j = k; j < n; ++j) {
            const double ljk = lfac.at(j, k);
            if (ljk == 0.0) continue;
            for (int i = j; i < n; ++i) {
                e.at(i, j) -= lfac.at(i, k) * ljk;
            }
        }
    }
    double num = 0.0, den = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            const double w = (i == j) ? 1.0 : 2.0;  // both triangles
            num += w * e.at(i, j) * e.at(i, j);
            den += w * a.at(i, j) * a.at(i, j);
        }
    }
    return std::sqrt(num / den);
}

namespace {

std::uint64_t potrf_flops(std::uint64_t n) {
    return n * (n + 1) * (2 * n + 1) / 6;
}

struct StaticCounter {
    int b;
    const PrecisionConfig& cfg;
    FlopBreakdown fb;

    // mirrors tree_trsm over an L subtree of order n at depth d
    void trsm(std::uint64_t m, std::uint64_t n, int d, Precision p) {
        if (n <= std::uint64_t(b) || m <= std::uint64_t(b)) {
            fb.add(p, Kernel::Trsm, m * n * n);
            return;
        }
        const std::uint64_t n1 = n / 2, n2 = n - n1;
        trsm(m, n1, d + 1, p);
        fb.add(p, Kernel::Gemm, 2 * m * n2 * n1);
        trsm(m, n2, d + 1, p);
    }

    // mirrors tree_syrk over a C subtree of order n at depth d
    void syrk(std::uint64_t n, std::uint64_t k, int d, Precision p) {
        if (n <= std::uint64_t(b)) {
            fb.add(cfg.leaf(), Kernel::Syrk, n * (n + 1) * k);
            return;
        }
        const std::uint64_t n1 = n / 2, n2 = n - n1;
        syrk(n1, k, d + 1, p);
        fb.add(cfg.at_depth(d), Kernel::Gemm, 2 * n2 * n1 * k);
        syrk(n2, k, d + 1, p);
    }

    void potrf(std::uint64_t n, int d) {
        if (n <= std::uint64_t(b)) {
            fb.add(cfg.leaf(), Kernel::Potrf, potrf_flops(n));
            return;
        }
        const std::uint64_t n1 = n / 2, n2 = n - n1;
        const Precision p = cfg.at_depth(d);
        potrf(n1, d + 1);
        trsm(n2, n1, d + 1, p);
        syrk(n2, n1, d + 1, p);
        potrf(n2, d + 1);
    }
};

}  // namespace

FlopBreakdown flop_breakdown(int n, int b, const PrecisionConfig& config) {
    if (n < 1 || b < 1) throw InvalidArgument("flop_breakdown: n, b >= 1");
    StaticCounter sc{b, config, {}};
    sc.potrf(std::uint64_t(n), 0);
    return sc.fb;
}

FactorReport factor_matrix(const Matrix& a, const PrecisionConfig& config,
                           int b, bool quantize) {
    FactorReport rep;
    rep.n = a.rows();
    rep.config = config.to_string();
    rep.b = b;
    rep.quantize = quantize;

    Matrix work = a;  // the one permitted copy, outside the solver
    const auto t0 = std::chrono::steady_clock::now();
    try {
        PrecisionTreeNode tree = build_tree(work.view(), config, b, quantize);
        SolveOptions opt;
        opt.leaf_size = b;
        opt.quantize = quantize;
        opt.flops = &rep.flops;
        tree_potrf(tree, opt);
        rep.status = "ok";
    } catch (const NotPositiveDefinite& e) {
        rep.status = "not-positive-definite";
        rep.detail = e.what();
    } catch (const NumericalBreakdown& e) {
        rep.status = "numerical-breakdown";
        rep.detail = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (rep.status == "ok") {
        rep.rel_error = factorization_error(a, work);
        rep.digits = -std::log10(rep.rel_error);
    }
    return rep;
}

std::vector<FactorReport> accuracy_sweep(
    const std::vector<int>& sizes, const std::vector<PrecisionConfig>& configs,
    int b, const std::vector<std::uint64_t>& seeds, bool quantize) {
    std::vector<FactorReport> out;
    out.reserve(sizes.size() * configs.size() * seeds.size());
    for (int n : sizes) {
        for (const PrecisionConfig& cfg : configs) {
            for (std::uint64_t seed : seeds) {
                Matrix a = spd_generate(n, seed);
                FactorReport rep = factor_matrix(a, cfg, b, quantize);
                rep.seed = seed;
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

}  // namespace treechol
