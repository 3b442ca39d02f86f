#pragma once

// csmverify command line: verify, table, show {csm,richardson,box}.
//
// Exit codes: 0 all pass, 1 conjecture violation found, 2 theorem or
// internal invariant failure, 3 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitUsage = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace schubert
