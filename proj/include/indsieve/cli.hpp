#pragma once

#include <iosfwd>

namespace indsieve::cli {

/// Runs one command line. Exit codes: 0 success, 1 usage or input error,
/// 2 theorem-scope violation (audit) or failed cross-check (count --check, verify).
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace indsieve::cli
