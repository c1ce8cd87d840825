#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace treechol {

// The three storage formats the solver emulates. Ordered by precision.
enum class Precision : int { Half = 0, Single = 1, Double = 2 };

inline constexpr double kHalfMax = 65504.0;  // IEEE binary16 max finite
inline constexpr double kSingleMax = 3.4028234663852886e38;
inline constexpr double kDoubleMax = 1.7976931348623157e308;

inline double range_max(Precision p) {
    switch (p) {
        case Precision::Half: return kHalfMax;
        case Precision::Single: return kSingleMax;
        default: return kDoubleMax;
    }
}

inline double unit_roundoff(Precision p) {
    switch (p) {
        case Precision::Half: return 0x1p-11;
        case Precision::Single: return 0x1p-24;
        default: return 0x1p-53;
    }
}

const char* precision_name(Precision p);  // "F16" / "F32" / "F64"

// Round a double to the nearest IEEE binary16 value (round-to-nearest-even)
// and widen back. Magnitudes past the overflow threshold become +-inf,
// subnormals are kept (gradual underflow), inf/nan pass through.
inline double round_to_half(double x) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    const int bexp = int((bits >> 52) & 0x7ff);
    if (bexp == 0x7ff) return x;  // inf / nan
    if (bexp == 0) {
        // double subnormal, far below the half subnormal range
        return x == 0.0 ? x : std::copysign(0.0, x);
    }
    const int e = bexp - 1023;
    if (e > 15) {
        return std::copysign(std::numeric_limits<double>::infinity(), x);
    }
    // quantum 2^(e-10) for normals, floored at 2^-24 in the subnormal range
    const int qe = (e < -14 ? -14 : e) - 10;
    const double q = std::bit_cast<double>(std::uint64_t(qe + 1023) << 52);
    // exact division by a power of two, then ties-to-even via nearbyint
    const double r = std::nearbyint(std::fabs(x) / q) * q;
    if (r > kHalfMax) {
        return std::copysign(std::numeric_limits<double>::infinity(), x);
    }
    return std::copysign(r, x);
}

inline double round_to_single(double x) {
    return double(float(x));
}

// Nearest representable value of `p`, widened back to double.
// Rounding to Double is the identity.
inline double round_to(double x, Precision p) {
    switch (p) {
        case Precision::Half: return round_to_half(x);
        case Precision::Single: return round_to_single(x);
        default: return x;
    }
}

// Ordered outer -> inner precision assignment. levels[0] is the outermost
// (largest off-diagonal) recursion level; the list saturates at its last
// entry for deeper levels and for the leaves.
struct PrecisionConfig {
    std::vector<Precision> levels;

    Precision at_depth(std::size_t d) const {
        return levels[d < levels.size() ? d : levels.size() - 1];
    }
    Precision leaf() const { return levels.back(); }

    bool operator==(const PrecisionConfig&) const = default;

    // Canonical form: "Pure F16" for single-level configs, "[F16, F32]"
    // otherwise. parse(to_string()) round-trips.
    std::string to_string() const;

    // Accepts "[F16, F32]", "Pure F32", FP-prefixed tokens, any case,
    // arbitrary whitespace. Throws SyntaxError on malformed input and
    // ValidationError when precision decreases outer -> inner.
    static PrecisionConfig parse(const std::string& text);
};

}  // namespace treechol
