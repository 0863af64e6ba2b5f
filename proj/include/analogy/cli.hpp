#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace analogy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// a single "error: <kind>: <message>" line goes to `err` on failure.
/// Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace analogy::cli
