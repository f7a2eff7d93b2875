#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "starlike/disk.hpp"
#include "starlike/harness.hpp"
#include "starlike/json_io.hpp"

namespace starlike::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kGateViolation = 2,
    kFail = 3,
    kHypothesisNotMet = 4,
};

/// Settings shared by every subcommand. Precedence: flags > --config file > defaults.
struct RunConfig {
    int order = 64;
    RadialGrid grid;
    Tolerances tol;
    std::uint64_t seed = 42;
    int trials = 1000;
    std::string out;      ///< empty: stdout
    std::string summary;  ///< falsify summary CSV; empty: none

    void validate() const;
};

void to_json(json& j, const RunConfig& c);
/// Overwrites the fields present in `j`.
void apply_json(const json& j, RunConfig& c);

int exit_code(Verdict verdict);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace starlike::cli
