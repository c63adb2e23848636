#pragma once
#include <string>
#include <vector>

namespace compscal {

// Full command-line interface. Exit codes: 0 success, 1 usage error,
// 2 computation error.
int cli_main(int argc, const char* const* argv);

// Convenience overload for tests; args[0] is the program name.
int cli_main(const std::vector<std::string>& args);

} // namespace compscal
