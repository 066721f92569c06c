#pragma once

#include <ostream>

namespace dp5 {

/// Exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 input parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dp5
