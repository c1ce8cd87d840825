#include "treechol/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "treechol/errors.hpp"
#include "treechol/mtx.hpp"
#include "treechol/tree.hpp"

namespace treechol {

namespace {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv_row(const FactorReport& r, std::ostream& out) {
    out << r.n << ",\"" << r.config << "\"," << r.b << ','
        << (r.quantize ? 1 : 0) << ',' << r.seed << ',' << r.status << ','
        << fmt_double(r.rel_error) << ',' << fmt_double(r.digits) << ','
        << r.flops.by_level[0] << ',' << r.flops.by_level[1] << ','
        << r.flops.by_level[2] << ',' << r.flops.total() << ','
        << fmt_double(r.wall_ms) << '\n';
}

void print_report_table(const FactorReport& r, std::ostream& out) {
    out << "n:         " << r.n << '\n'
        << "config:    " << r.config << '\n'
        << "leaf:      " << r.b << '\n'
        << "quantize:  " << (r.quantize ? "on" : "off") << '\n'
        << "status:    " << r.status << '\n';
    if (!r.detail.empty()) out << "detail:    " << r.detail << '\n';
    if (r.status == "ok") {
        out << "rel_error: " << fmt_double(r.rel_error) << '\n'
            << "digits:    " << fmt_double(r.digits) << '\n';
    }
    out << "flops:     F16=" << r.flops.by_level[0]
        << " F32=" << r.flops.by_level[1] << " F64=" << r.flops.by_level[2]
        << " total=" << r.flops.total() << '\n'
        << "wall_ms:   " << fmt_double(r.wall_ms) << '\n';
}

void print_plan(int n, int b, const PrecisionConfig& cfg,
                const FlopBreakdown& fb, std::ostream& out) {
    const double t = double(fb.total());
    out << "n=" << n << " leaf=" << b << " config=" << cfg.to_string()
        << " total_flops=" << fb.total() << "\n\n";
    out << "per precision:\n";
    for (Precision p :
         {Precision::Half, Precision::Single, Precision::Double}) {
        const std::uint64_t f = fb.by_level[int(p)];
        char buf[64];
        std::snprintf(buf, sizeof(buf), "  %-4s %20llu  %6.2f%%\n",
                      precision_name(p), (unsigned long long)f,
                      t > 0 ? 100.0 * double(f) / t : 0.0);
        out << buf;
    }
    out << "per kernel:\n";
    for (Kernel k :
         {Kernel::Potrf, Kernel::Trsm, Kernel::Syrk, Kernel::Gemm}) {
        const std::uint64_t f = fb.by_kernel[int(k)];
        char buf[80];
        std::snprintf(buf, sizeof(buf), "  %-10s %14llu  %6.2f%%  (%llu calls)\n",
                      kernel_name(k), (unsigned long long)f,
                      t > 0 ? 100.0 * double(f) / t : 0.0,
                      (unsigned long long)fb.calls[int(k)]);
        out << buf;
    }
    const double off = double(fb.by_kernel[int(Kernel::Trsm)] +
                              fb.by_kernel[int(Kernel::Syrk)] +
                              fb.by_kernel[int(Kernel::Gemm)]);
    char buf[80];
    std::snprintf(buf, sizeof(buf),
                  "off-diagonal share (TRSM+SYRK+GEMM): %.2f%%\n",
                  t > 0 ? 100.0 * off / t : 0.0);
    out << buf;
}

int emit_report(const FactorReport& rep, const std::string& out_path,
                const std::string& format) {
    if (format == "csv") {
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            write_csv({rep}, f);
        } else {
            write_csv({rep}, std::cout);
        }
    } else {
        print_report_table(rep, std::cout);
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            write_csv({rep}, f);
        }
    }
    return rep.status == "ok" ? 0 : 2;
}

// max |a_ij - a_ji| / max |a_ij|
double relative_asymmetry(const Matrix& a) {
    double asym = 0.0, amax = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) {
            amax = std::max(amax, std::fabs(a.at(i, j)));
            if (i > j) {
                asym = std::max(asym, std::fabs(a.at(i, j) - a.at(j, i)));
            }
        }
    }
    return amax > 0.0 ? asym / amax : 0.0;
}

}  // namespace

void write_csv(const std::vector<FactorReport>& reports, std::ostream& out) {
    out << "n,config,leaf,quantize,seed,status,rel_error,digits,"
           "flops_f16,flops_f32,flops_f64,flops_total,wall_ms\n";
    for (const FactorReport& r : reports) write_csv_row(r, out);
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Nested recursive mixed-precision Cholesky bench"};
    app.require_subcommand(1);

    int size = 0;
    std::vector<int> sizes;
    std::string config = "Pure F64";
    std::vector<std::string> configs;
    int leaf = 64;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> seeds;
    bool quantize = true;
    std::string out_path;
    std::string format = "table";
    std::string mtx_path;

    auto* cmd_factor = app.add_subcommand(
        "factor", "Factor one generated SPD matrix and report accuracy");
    cmd_factor->add_option("--size", size, "matrix order n")->required();
    cmd_factor->add_option("--config", config, "precision config");
    cmd_factor->add_option("--leaf", leaf, "leaf size b");
    cmd_factor->add_option("--seed", seed, "generator seed");
    cmd_factor->add_flag("--quantize,!--no-quantize", quantize,
                         "per-block quantization (default on)");
    cmd_factor->add_option("--out", out_path, "CSV output path");
    cmd_factor->add_option("--format", format, "table|csv")
        ->check(CLI::IsMember({"table", "csv"}));

    auto* cmd_sweep = app.add_subcommand(
        "sweep", "Factor a grid of (size, config, seed) cells, emit CSV");
    cmd_sweep->add_option("--sizes", sizes, "matrix orders")->required();
    // one value per occurrence: bracketed configs like "[F16, F32]" must not
    // be expanded as array literals
    cmd_sweep
        ->add_option("--configs", configs,
                     "precision config (repeat for several)")
        ->required()
        ->expected(1, std::numeric_limits<int>::max())
        ->allow_extra_args(false);
    cmd_sweep->add_option("--leaf", leaf, "leaf size b");
    cmd_sweep->add_option("--seeds", seeds, "generator seeds")->required();
    cmd_sweep->add_flag("--quantize,!--no-quantize", quantize,
                        "per-block quantization (default on)");
    cmd_sweep->add_option("--out", out_path, "CSV output path");

    auto* cmd_plan = app.add_subcommand(
        "plan", "Static flop breakdown for one (size, leaf, config)");
    cmd_plan->add_option("--size", size, "matrix order n")->required();
    cmd_plan->add_option("--leaf", leaf, "leaf size b");
    cmd_plan->add_option("--config", config, "precision config");

    auto* cmd_mtx = app.add_subcommand(
        "mtx", "Load a Matrix Market file and factorize it");
    cmd_mtx->add_option("--mtx-path", mtx_path, "input .mtx file")
        ->required();
    cmd_mtx->add_option("--config", config, "precision config");
    cmd_mtx->add_option("--leaf", leaf, "leaf size b");
    cmd_mtx->add_flag("--quantize,!--no-quantize", quantize,
                      "per-block quantization (default on)");
    cmd_mtx->add_option("--out", out_path, "CSV output path");
    cmd_mtx->add_option("--format", format, "table|csv")
        ->check(CLI::IsMember({"table", "csv"}));
    int densify_limit = kDefaultDensifyLimit;
    cmd_mtx->add_option("--densify-limit", densify_limit,
                        "largest order accepted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (cmd_factor->parsed()) {
            const PrecisionConfig cfg = PrecisionConfig::parse(config);
            Matrix a = spd_generate(size, seed);
            FactorReport rep = factor_matrix(a, cfg, leaf, quantize);
            rep.seed = seed;
            return emit_report(rep, out_path, format);
        }
        if (cmd_sweep->parsed()) {
            std::vector<PrecisionConfig> cfgs;
            for (const std::string& c : configs) {
                cfgs.push_back(PrecisionConfig::parse(c));
            }
            const auto reports =
                accuracy_sweep(sizes, cfgs, leaf, seeds, quantize);
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw Error("cannot open '" + out_path + "'");
                write_csv(reports, f);
            } else {
                write_csv(reports, std::cout);
            }
            return 0;
        }
        if (cmd_plan->parsed()) {
            const PrecisionConfig cfg = PrecisionConfig::parse(config);
            print_plan(size, leaf, cfg, flop_breakdown(size, leaf, cfg),
                       std::cout);
            return 0;
        }
        if (cmd_mtx->parsed()) {
            const PrecisionConfig cfg = PrecisionConfig::parse(config);
            Matrix a = load_matrix_market(mtx_path, densify_limit);
            const double asym = relative_asymmetry(a);
            if (asym > 1e-12) {
                throw NotSymmetric("matrix is not symmetric (relative "
                                   "asymmetry " +
                                   std::to_string(asym) + ")");
            }
            FactorReport rep = factor_matrix(a, cfg, leaf, quantize);
            return emit_report(rep, out_path, format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace treechol
