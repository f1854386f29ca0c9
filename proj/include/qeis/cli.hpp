#pragma once

#include <ostream>

namespace qeis::cli {

// Exit codes: 0 ok, 1 usage, 2 validation, 3 consistency, 4 resource.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qeis::cli
