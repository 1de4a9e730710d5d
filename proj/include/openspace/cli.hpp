#pragma once

#include <ostream>

namespace openspace::cli {

/// Entry point of the `openspace` command line tool; returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace openspace::cli
