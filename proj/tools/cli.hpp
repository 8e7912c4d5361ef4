#pragma once

#include <ostream>

namespace brauer::cli {

// Exit codes: 0 success or pass, 1 validation or verification failure,
// 2 usage error (synopsis written to `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brauer::cli
