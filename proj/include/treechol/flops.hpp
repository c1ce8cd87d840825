#pragma once

#include <array>
#include <cstdint>

#include "treechol/precision.hpp"

namespace treechol {

enum class Kernel : int { Potrf = 0, Trsm = 1, Syrk = 2, Gemm = 3 };

const char* kernel_name(Kernel k);

// Mathematical flop counts (multiply-add pairs count as 2) attributed both
// to the precision a block executes at and to the kernel that performed
// them. The two attributions always sum to the same total.
struct FlopBreakdown {
    std::array<std::uint64_t, 3> by_level{};   // indexed by Precision
    std::array<std::uint64_t, 4> by_kernel{};  // indexed by Kernel
    std::array<std::uint64_t, 4> calls{};      // kernel invocation counts

    void add(Precision p, Kernel k, std::uint64_t flops) {
        by_level[int(p)] += flops;
        by_kernel[int(k)] += flops;
        ++calls[int(k)];
    }

    std::uint64_t total() const {
        return by_level[0] + by_level[1] + by_level[2];
    }

    double level_fraction(Precision p) const {
        const std::uint64_t t = total();
        return t == 0 ? 0.0 : double(by_level[int(p)]) / double(t);
    }

    double kernel_fraction(Kernel k) const {
        const std::uint64_t t = total();
        return t == 0 ? 0.0 : double(by_kernel[int(k)]) / double(t);
    }

    FlopBreakdown& operator+=(const FlopBreakdown& o) {
        for (int i = 0; i < 3; ++i) by_level[i] += o.by_level[i];
        for (int i = 0; i < 4; ++i) by_kernel[i] += o.by_kernel[i];
        for (int i = 0; i < 4; ++i) calls[i] += o.calls[i];
        return *this;
    }
};

}  // namespace treechol
