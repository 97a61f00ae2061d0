#ifndef CSST_TOOLS_CLI_H
#define CSST_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace csst {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitError = 2, kExitCap = 3 };

/// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace csst

#endif
