#pragma once

#include <iosfwd>
#include <string>

#include "darboux/cplx_linalg.hpp"

namespace darboux::cli {

/// "a+bi" (also "a", "bi", "i", "-i", scientific notation throughout).
/// Throws std::invalid_argument naming the offending text.
cplx parse_complex(const std::string& text);

/// "start:stop:count" with count >= 2 and stop > start.
struct Range {
    double start;
    double stop;
    int count;
};
Range parse_range(const std::string& text);

/// Entry point behind main(): parses argv, runs one subcommand, writes results
/// to `out` (or files) and diagnostics to `err`.
/// Exit codes: 0 success, 2 argument/precondition error, 3 numeric error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace darboux::cli
