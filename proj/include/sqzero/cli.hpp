#ifndef SQZERO_CLI_HPP
#define SQZERO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sqz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sqz::cli

#endif // SQZERO_CLI_HPP
