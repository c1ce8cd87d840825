#pragma once

#include <stdexcept>
#include <string>

namespace treechol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config grammar violations (unknown token, empty list).
struct SyntaxError : Error {
    using Error::Error;
};

// Structurally valid but semantically rejected input (non-monotone config).
struct ValidationError : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// Pivot k (global row index) was <= 0 or non-finite during factorization.
struct NotPositiveDefinite : Error {
    int index;
    explicit NotPositiveDefinite(int k)
        : Error("matrix is not positive definite: pivot " + std::to_string(k) +
                " is non-positive or non-finite"),
          index(k) {}
};

// Triangular factor has a zero or non-finite diagonal entry.
struct SingularDiagonal : Error {
    int index;
    explicit SingularDiagonal(int k)
        : Error("singular triangular factor: diagonal entry " +
                std::to_string(k) + " is zero or non-finite"),
          index(k) {}
};

// Non-finite values appeared in a block mid-factorization (overflow or
// underflow-induced corruption, as opposed to an indefinite input).
struct NumericalBreakdown : Error {
    using Error::Error;
};

// Matrix Market reader errors.
struct ParseError : Error {
    using Error::Error;
};
struct UnsupportedFormat : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};

}  // namespace treechol
