#pragma once

#include <ostream>

namespace permorb::cli {

/// Runs the command line tool. Returns 0 on success, 1 when verification
/// fails and 2 on input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permorb::cli
