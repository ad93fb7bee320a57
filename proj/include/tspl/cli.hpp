#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tspl {

enum class Subcommand { Solve, CheckExistence, Classify, QuadratureDemo };

enum class OutputFormat { Json, Csv };

/// Values given on the command line that replace problem-file values; every
/// override present is echoed in the output provenance.
struct Overrides {
    std::optional<double> lambda;
    std::optional<double> tol;
    std::optional<int> max_iter;
    std::optional<std::uint64_t> seed;
    std::optional<double> a;
    std::optional<double> b;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::Solve;
    std::string problem_path;
    std::optional<std::string> output_path; // standard output when absent
    OutputFormat format = OutputFormat::Json;
    Overrides overrides;
};

/// Executes one subcommand and writes the result document.
/// Exit codes: 0 success, 1 hypothesis/validation violation,
/// 2 solver non-convergence or divergence, 3 I/O or parse error.
/// Errors are also serialized into the output document when writable.
int run(const RunConfig& cfg);

} // namespace tspl
