#pragma once

#include <ostream>

namespace chebwidom::cli {

/// Exit status: 0 ok, 1 solver error, 2 bound or identity violated, 3 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chebwidom::cli
