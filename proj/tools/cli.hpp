#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anonrs::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // verification or reconstruction failure
inline constexpr int kUsage = 2;   // bad arguments, files or contracts

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anonrs::cli
