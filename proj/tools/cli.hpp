#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fourierlab/numeric.hpp"

namespace fourierlab::cli {

/// Runs one command line (args exclude the program name). Returns 0 on
/// success, 2 on usage errors, 1 on numerical or I/O failure. Output files
/// are written only after the command has finished computing.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `x,value` rows at x_j = j * period / M, j = 0..M-1.
void emit_grid(const RealMap& f, int nodes, std::ostream& out, double period = 1.0);

}  // namespace fourierlab::cli
