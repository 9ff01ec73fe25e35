#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace instrseq::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kPrecondition = 3 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a transform pipeline such as "h,rev,swap:a,b,flip:c" into steps.
/// A swap takes the token after it as its second operand.
std::vector<std::string> split_pipeline(const std::string& text);

}  // namespace instrseq::cli
