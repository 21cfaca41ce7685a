#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wfai::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;

// Runs one command line (without the program name). Records go to `out`
// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace wfai::cli
