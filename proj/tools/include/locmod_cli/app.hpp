#pragma once

#include <iosfwd>

namespace locmod::cli {

/// Parses arguments, runs the command and writes the report to --out or
/// `out`. Returns 0 on success, 1 when verify finds violations, 2 on usage,
/// parse or other errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace locmod::cli
