#pragma once

#include <iosfwd>

namespace ramanujan::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramanujan::cli
