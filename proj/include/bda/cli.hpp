#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bda/error.hpp"

namespace bda::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kDuplicateId = 3,
    kUnknownCategory = 4,
    kMissingEstimate = 5,
    kNoPositives = 6,
    kSwathOutside = 7,
};

int exit_code_for(Errc code) noexcept;

/// Runs one command. `args` excludes the program name. Data goes to `out`
/// when a command has no output path; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bda::cli
