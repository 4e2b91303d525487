#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pfrac::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs one subcommand. args excludes the program name. "-" for --input or
// --output means the supplied in / out stream. Errors are written to err as
// a {"error": code, "detail": str} record.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Names accepted by `example --name`.
const std::vector<std::string>& example_names();

// Canned dataset with inputs and the computed expansions. Throws
// UnknownExample.
nlohmann::json example(const std::string& name);

}  // namespace pfrac::cli
