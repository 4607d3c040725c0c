#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reactsim {

/// Environment variable that overrides a config's output directory
/// (`--out` still wins).
inline constexpr const char* kOutDirEnv = "REACTSIM_OUT_DIR";

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitIo = 2, kExitVerifyFailed = 3 };

/// Entry point of the command-line tool. args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace reactsim
