#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symisr {

// Exit codes: 0 success, 1 usage or parse error, 2 semantic error,
// failed verification or fuzz mismatch, 3 unsupported class.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace symisr
