#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parkfn::cli {

/// Runs the `parkfn` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on usage or domain errors, 2 on internal
/// assertion failures. Results go to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest text that is locale-independent and carries 17 significant digits.
std::string format_real(double x);

} // namespace parkfn::cli
