#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

namespace treechol {

// Rectangular window into a column-major backing buffer. All block
// operations mutate the shared buffer through views; views never own data.
struct TileView {
    double* data = nullptr;
    int rows = 0;
    int cols = 0;
    int ld = 0;    // column stride of the backing buffer
    int row0 = 0;  // position in the backing matrix, for diagnostics
    int col0 = 0;

    double& at(int i, int j) const { return data[std::size_t(j) * ld + i]; }

    TileView sub(int r, int c, int m, int n) const {
        return {data + std::size_t(c) * ld + r, m, n, ld, row0 + r, col0 + c};
    }
};

// Column-major dense matrix owning its storage. Buffer allocations are
// counted globally so tests can verify the solver works strictly in place.
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {
        allocations_.fetch_add(1, std::memory_order_relaxed);
    }
    Matrix(const Matrix& o) : rows_(o.rows_), cols_(o.cols_), data_(o.data_) {
        allocations_.fetch_add(1, std::memory_order_relaxed);
    }
    Matrix(Matrix&&) noexcept = default;
    Matrix& operator=(const Matrix&) = default;
    Matrix& operator=(Matrix&&) noexcept = default;

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& at(int i, int j) { return data_[std::size_t(j) * rows_ + i]; }
    double at(int i, int j) const { return data_[std::size_t(j) * rows_ + i]; }

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }

    TileView view() { return {data_.data(), rows_, cols_, rows_, 0, 0}; }

    // Number of numeric buffers created since process start.
    static long allocations() {
        return allocations_.load(std::memory_order_relaxed);
    }

private:
    int rows_;
    int cols_;
    std::vector<double> data_;
    static std::atomic<long> allocations_;
};

}  // namespace treechol
