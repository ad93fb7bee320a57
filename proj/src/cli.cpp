#include "tspl/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "tspl/errors.hpp"
#include "tspl/io.hpp"
#include "tspl/operator.hpp"
#include "tspl/solver.hpp"

namespace tspl {

using nlohmann::json;

namespace {

const char* subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::Solve: return "solve";
        case Subcommand::CheckExistence: return "check-existence";
        case Subcommand::Classify: return "classify";
        default: return "quadrature-demo";
    }
}

json provenance(const RunConfig& cfg, const Problem* problem) {
    json overrides = json::object();
    if (cfg.overrides.lambda) overrides["lambda"] = *cfg.overrides.lambda;
    if (cfg.overrides.tol) overrides["tol"] = *cfg.overrides.tol;
    if (cfg.overrides.max_iter) overrides["max_iter"] = *cfg.overrides.max_iter;
    if (cfg.overrides.seed) overrides["seed"] = *cfg.overrides.seed;
    if (cfg.overrides.a) overrides["a"] = *cfg.overrides.a;
    if (cfg.overrides.b) overrides["b"] = *cfg.overrides.b;
    json p{{"subcommand", subcommand_name(cfg.subcommand)},
           {"problem", cfg.problem_path},
           {"format", cfg.format == OutputFormat::Json ? "json" : "csv"},
           {"overrides", overrides}};
    if (problem) {
        p["lambda"] = problem->spec.lambda();
        p["solver"] = json{{"tol", problem->solver.tol},
                           {"max_iter", problem->solver.max_iter},
                           {"relax", problem->solver.relax},
                           {"init", problem->solver.init},
                           {"seed", problem->solver.seed}};
    }
    return p;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const RunConfig& cfg, const std::string& text) {
    if (cfg.output_path) {
        std::ofstream out(*cfg.output_path, std::ios::binary);
        if (!out) throw ParseError("cannot open output file: " + *cfg.output_path);
        out << text;
    } else {
        std::cout << text;
    }
}

void write_json(const RunConfig& cfg, const json& doc) {
    write_text(cfg, doc.dump(2) + "\n");
}

std::string csv_columns(const std::vector<std::pair<std::string, const std::vector<double>*>>& cols) {
    std::ostringstream out;
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c].first;
    out << "\n";
    const std::size_t rows = cols.empty() ? 0 : cols.front().second->size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out << (c ? "," : "") << format_number((*cols[c].second)[i]);
        }
        out << "\n";
    }
    return out.str();
}

// Scalar results are emitted as key,value rows in csv mode.
std::string csv_key_values(const json& doc) {
    std::ostringstream out;
    out << "key,value\n";
    const json flat = doc.flatten();
    for (const auto& [key, value] : flat.items()) {
        if (key.rfind("/provenance", 0) == 0) continue;
        out << key << ",";
        if (value.is_number_float()) {
            out << format_number(value.get<double>());
        } else {
            out << value.dump();
        }
        out << "\n";
    }
    return out.str();
}

std::filesystem::path history_path(const std::string& out_path) {
    std::filesystem::path p(out_path);
    std::filesystem::path h = p.parent_path() / p.stem();
    h += ".history.csv";
    return h;
}

int run_solve(const RunConfig& cfg, const Problem& problem) {
    const SolveReport report = solve(problem.spec, problem.solver);
    json doc = to_json(report);
    if (problem.existence) {
        const double lo = std::min(problem.existence->a, problem.existence->b);
        const double hi = std::max(problem.existence->a, problem.existence->b);
        doc["norm_in_ab"] = report.norm >= lo && report.norm <= hi;
    }
    doc["provenance"] = provenance(cfg, &problem);
    if (cfg.format == OutputFormat::Json) {
        write_json(cfg, doc);
    } else {
        const auto& grid = report.solution.grid();
        write_text(cfg, csv_columns({{"t", &grid.points()}, {"u", &report.solution.values()}}));
        if (cfg.output_path) {
            std::ofstream hist(history_path(*cfg.output_path));
            hist << "iteration,step\n";
            for (std::size_t i = 0; i < report.history.size(); ++i) {
                hist << (i + 1) << "," << format_number(report.history[i]) << "\n";
            }
        }
    }
    return report.converged ? 0 : 2;
}

int run_check_existence(const RunConfig& cfg, const Problem& problem) {
    if (!problem.existence) {
        throw ValidationError("check-existence needs a and b (file block or --a/--b)", "/existence");
    }
    const ExistenceReport report =
        existence_check(problem.spec, problem.existence->a, problem.existence->b);
    json doc = to_json(report);
    doc["provenance"] = provenance(cfg, &problem);
    if (cfg.format == OutputFormat::Json) {
        write_json(cfg, doc);
    } else {
        write_text(cfg, csv_key_values(doc));
    }
    return 0;
}

int run_classify(const RunConfig& cfg, const Problem& problem) {
    const LimitReport report = classify_limits(problem.spec);
    json doc = to_json(report);
    doc["provenance"] = provenance(cfg, &problem);
    if (cfg.format == OutputFormat::Json) {
        write_json(cfg, doc);
    } else {
        write_text(cfg, csv_key_values(doc));
    }
    return 0;
}

// Plot-ready dump of the calculus layer: grid structure plus the cumulative
// delta/nabla integrals of the identity integrand.
int run_quadrature_demo(const RunConfig& cfg, const Problem& problem) {
    const auto grid = problem.spec.grid_ptr();
    const GridFunction identity = GridFunction::sample(grid, [](double t) { return t; });
    const std::vector<double> dp = delta_prefix(identity);
    const std::vector<double> np = nabla_prefix(identity);
    std::vector<double> mu(grid->size()), nu(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        mu[i] = grid->mu(i);
        nu[i] = grid->nu(i);
    }
    if (cfg.format == OutputFormat::Json) {
        json doc{{"integrand", "t"},
                 {"t", grid->points()},
                 {"mu", mu},
                 {"nu", nu},
                 {"delta_prefix", dp},
                 {"nabla_prefix", np},
                 {"delta_total", dp.back()},
                 {"nabla_total", np.back()}};
        doc["provenance"] = provenance(cfg, &problem);
        write_json(cfg, doc);
    } else {
        write_text(cfg, csv_columns({{"t", &grid->points()},
                                     {"mu", &mu},
                                     {"nu", &nu},
                                     {"delta_prefix", &dp},
                                     {"nabla_prefix", &np}}));
    }
    return 0;
}

int write_error(const RunConfig& cfg, int code, const char* kind, const std::string& message,
                const std::string& location) {
    json doc{{"error", json{{"exit_code", code},
                            {"kind", kind},
                            {"message", message},
                            {"location", location}}}};
    doc["provenance"] = provenance(cfg, nullptr);
    try {
        write_json(cfg, doc);
    } catch (const std::exception&) {
        // output path unwritable; the exit code still carries the outcome
    }
    std::cerr << "error: " << message << "\n";
    return code;
}

} // namespace

int run(const RunConfig& cfg) {
    try {
        const Problem problem = load_problem(cfg.problem_path);
        Problem effective{problem.spec, problem.solver, problem.existence};
        if (cfg.overrides.lambda) {
            effective.spec = problem.spec.with_lambda(*cfg.overrides.lambda);
        }
        if (cfg.overrides.tol) effective.solver.tol = *cfg.overrides.tol;
        if (cfg.overrides.max_iter) effective.solver.max_iter = *cfg.overrides.max_iter;
        if (cfg.overrides.seed) effective.solver.seed = *cfg.overrides.seed;
        if (cfg.overrides.a || cfg.overrides.b) {
            ExistenceParams params = effective.existence.value_or(ExistenceParams{});
            if (cfg.overrides.a) params.a = *cfg.overrides.a;
            if (cfg.overrides.b) params.b = *cfg.overrides.b;
            effective.existence = params;
        }
        switch (cfg.subcommand) {
            case Subcommand::Solve: return run_solve(cfg, effective);
            case Subcommand::CheckExistence: return run_check_existence(cfg, effective);
            case Subcommand::Classify: return run_classify(cfg, effective);
            default: return run_quadrature_demo(cfg, effective);
        }
    } catch (const ParseError& e) {
        return write_error(cfg, 3, "parse", e.what(), e.location);
    } catch (const ValidationError& e) {
        return write_error(cfg, 1, "validation", e.what(), e.location);
    } catch (const HypothesisError& e) {
        return write_error(cfg, 1, "hypothesis", e.what(), "");
    } catch (const DivergenceError& e) {
        return write_error(cfg, 2, "divergence", e.what(), "");
    } catch (const std::exception& e) {
        return write_error(cfg, 3, "io", e.what(), "");
    }
}

} // namespace tspl
