#pragma once

#include <istream>
#include <string>

#include "treechol/matrix.hpp"

namespace treechol {

inline constexpr int kDefaultDensifyLimit = 20000;

// Read a Matrix Market file (coordinate or array, real or integer, general
// or symmetric, 1-based, %-comments) into a dense square matrix. Symmetric
// inputs are mirrored into both triangles. Throws ParseError,
// UnsupportedFormat (complex / pattern / non-square / skew) or TooLarge
// (n > densify_limit).
Matrix load_matrix_market(std::istream& in,
                          int densify_limit = kDefaultDensifyLimit);
Matrix load_matrix_market(const std::string& path,
                          int densify_limit = kDefaultDensifyLimit);

}  // namespace treechol
