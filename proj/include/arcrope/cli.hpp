#pragma once

#include <ostream>

namespace arcrope {

/// Command-line entry point. Exit codes: 0 success, 1 validation failure,
/// 2 parse/IO/usage error. Diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arcrope
