#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kaa {

/// Runs one `kaa` command line (args[0] is the program name). Exit codes:
/// 0 success, 1 a negative verdict or failed replay, 2 usage or input error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace kaa
