#pragma once

#include <string>
#include <vector>

namespace dronecell {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitValidation = 2;

/// Full command surface of the dronecell tool, callable in-process so
/// tests can drive it without spawning. args excludes argv[0].
/// Subcommands: solve, simulate, compare, oracle.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace dronecell
