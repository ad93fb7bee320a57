#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "tspl/analysis.hpp"
#include "tspl/problem.hpp"
#include "tspl/solver.hpp"

namespace tspl {

struct ExistenceParams {
    double a = 1.0;
    double b = 1.0;
};

/// A fully validated problem document.
struct Problem {
    ProblemSpec spec;
    SolverConfig solver;
    std::optional<ExistenceParams> existence;
};

/// Parses and validates a problem document. Throws ParseError on syntax or
/// schema errors, ValidationError (with a JSON-pointer location) on values
/// outside the model's admissible ranges.
Problem parse_problem(const nlohmann::json& doc);

/// parse_problem on a file. Throws ParseError when the file is unreadable.
Problem load_problem(const std::filesystem::path& path);

nlohmann::json to_json(const ConeReport& cone);
nlohmann::json to_json(const SolveReport& report);
nlohmann::json to_json(const ExistenceReport& report);
nlohmann::json to_json(const LimitReport& report);

} // namespace tspl
