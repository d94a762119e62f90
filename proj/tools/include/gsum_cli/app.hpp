#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsum::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,      // bad flags, bad values, unparsable expression
    exit_numerical = 2,  // evaluation or algorithm failure
};

/// Runs the gsum command line. args excludes the program name.
/// Tables go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits with a '.' separator whatever the locale.
std::string format_real(double v);

} // namespace gsum::cli
