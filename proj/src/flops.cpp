#include "treechol/flops.hpp"

namespace treechol {

const char* kernel_name(Kernel k) {
    switch (k) {
        case Kernel::Potrf: return "POTRF-leaf";
        case Kernel::Trsm: return "TRSM-leaf";
        case Kernel::Syrk: return "SYRK-leaf";
        default: return "GEMM";
    }
}

}  // namespace treechol
