#pragma once

#include <iosfwd>

namespace seasonal::cli {

// Entry point behind main(). Exit codes: 0 success, 1 numerical
// non-convergence or blow-up, 2 invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seasonal::cli
