#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "maskstego/error.hpp"

namespace maskstego::cli {

/// Process exit codes. Stable: scripts depend on them.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;    // bad flags, config file, key or payload encoding
inline constexpr int kExitCapacity = 3;  // message does not fit the cover
inline constexpr int kExitDecode = 4;    // desync or truncated stream during extraction
inline constexpr int kExitModel = 5;     // LM transport, protocol or determinism failure
inline constexpr int kExitIo = 6;        // file read/write failure

int exit_code(ErrorKind kind) noexcept;

/// Runs the tool on `args` (program name excluded). Reports and tables go
/// to `out`, diagnostics and --verbose echoes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maskstego::cli
