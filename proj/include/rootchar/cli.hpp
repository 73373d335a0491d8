#pragma once

#include <ostream>

namespace rootchar {

/// Exit codes: 0 success (verdicts live in the JSON), 1 computation refused
/// (e.g. group too large), 2 malformed input or usage, 3 internal inconsistency.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootchar
