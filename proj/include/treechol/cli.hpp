#pragma once

#include <iosfwd>
#include <vector>

#include "treechol/analysis.hpp"

namespace treechol {

// Entry point behind the `treechol` binary; exposed so tests can drive the
// CLI in-process. Returns the process exit code: 0 success, 1 usage or
// input error, 2 numerical failure.
int run_cli(int argc, const char* const* argv);

// Fixed-schema CSV emission (header row included, LF endings).
void write_csv(const std::vector<FactorReport>& reports, std::ostream& out);

}  // namespace treechol
