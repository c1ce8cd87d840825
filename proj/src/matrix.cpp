#include "treechol/matrix.hpp"

namespace treechol {

std::atomic<long> Matrix::allocations_{0};

}  // namespace treechol
