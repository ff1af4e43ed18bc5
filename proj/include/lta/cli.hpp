#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lta::cli {

enum ExitCode : int { kOk = 0, kPropertyFails = 1, kInputError = 2 };

/// Runs one command line (without the program name). Reports go to `out`;
/// failures produce a single "error: <Kind>: <message>" line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lta::cli
