#ifndef QDIALOGUE_TOOLS_CLI_H
#define QDIALOGUE_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qdialogue::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the qdialogue binary. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qdialogue::cli

#endif
