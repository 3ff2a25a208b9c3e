#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lzdr::cli {

enum ExitCode : int { ok = 0, usage = 1, io = 2, decode_failure = 3 };

/// Runs the command line `args` (without the program name). `-` paths read
/// from `in` or write to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lzdr::cli
