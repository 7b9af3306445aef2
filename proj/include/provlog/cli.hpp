#pragma once

#include <ostream>

namespace provlog {

// Runs the provlog command line. Exit codes: 0 provable / true / passed,
// 1 refuted / false / failed, 2 usage or input error.
int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

} // namespace provlog
