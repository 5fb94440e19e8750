#pragma once

// Subcommand drivers behind the sp2lab executable.
//
// Exit codes: 0 all checks passed, 1 a verification failed (the report lists
// reproducible witnesses), 2 usage or configuration error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp2lab/cartan.hpp"
#include "sp2lab/cli/report.hpp"

namespace sp2lab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    std::uint64_t seed = 1;
    std::optional<std::size_t> samples;  // per-command default when unset
    std::vector<double> t_values;        // theorem1: multiples of sigma
    std::optional<double> tol;
    std::string format = "json";
    std::string out;
    std::optional<Family> family;
    bool adversarial = false;
    std::vector<double> x, y;  // classify
    bool corrupt_bracket = false;
    unsigned threads = 0;  // not part of the report payload
};

/// Default sample count of a subcommand.
std::size_t default_samples(const std::string& subcommand);

/// Runs one subcommand and returns its report (without timing). Throws
/// UsageError for invalid configurations.
Json execute(const RunConfig& cfg);

/// Full command line: parse, execute, write, return the exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sp2lab::cli
