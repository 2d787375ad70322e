// The l2i command line: check, infer, normalize, dualize, equal, sense, gen.

#ifndef L2I_CLI_H_
#define L2I_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace l2i::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // ill-typed, invalid, distinct, non-synonymous
  kUsage = 2,     // bad arguments, unreadable input, syntax errors
  kExhausted = 3, // fuel ran out
};

// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l2i::cli

#endif  // L2I_CLI_H_
