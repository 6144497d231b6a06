#pragma once

#include <iosfwd>

namespace gp::cli {

/// Runs one CLI invocation. Answer-style commands (wp, conj) exit 0/1 by
/// answer; parse and validation problems print to `err` and return 2;
/// internal cross-check failures return 3.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

} // namespace gp::cli
