#include <string>

#include <CLI11.hpp>

#include "tspl/cli.hpp"

namespace {

void add_common(CLI::App* cmd, tspl::RunConfig& cfg, std::string& out, std::string& format) {
    cmd->add_option("--problem", cfg.problem_path, "problem file (JSON)")->required();
    cmd->add_option("--out", out, "output file (standard output when omitted)");
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--lambda", cfg.overrides.lambda, "override the forcing strength lambda");
    cmd->add_option("--tol", cfg.overrides.tol, "override the solver step tolerance");
    cmd->add_option("--max-iter", cfg.overrides.max_iter, "override the iteration cap");
    cmd->add_option("--seed", cfg.overrides.seed, "override the sampling seed");
    cmd->add_option("--a", cfg.overrides.a, "override the lower norm level a");
    cmd->add_option("--b", cfg.overrides.b, "override the upper norm level b");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlocal p-Laplacian boundary-value tool on time scales"};
    app.require_subcommand(1);

    tspl::RunConfig cfg;
    std::string out;
    std::string format = "json";

    auto* solve = app.add_subcommand("solve", "run the fixed-point solver");
    auto* check = app.add_subcommand("check-existence", "evaluate the existence conditions");
    auto* classify = app.add_subcommand("classify", "classify the f0/finf limits");
    auto* demo = app.add_subcommand("quadrature-demo", "emit grid structure and prefix integrals");
    for (auto* cmd : {solve, check, classify, demo}) add_common(cmd, cfg, out, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3; // usage errors map to the I/O exit code
    }

    if (solve->parsed()) cfg.subcommand = tspl::Subcommand::Solve;
    if (check->parsed()) cfg.subcommand = tspl::Subcommand::CheckExistence;
    if (classify->parsed()) cfg.subcommand = tspl::Subcommand::Classify;
    if (demo->parsed()) cfg.subcommand = tspl::Subcommand::QuadratureDemo;
    if (!out.empty()) cfg.output_path = out;
    cfg.format = format == "csv" ? tspl::OutputFormat::Csv : tspl::OutputFormat::Json;

    return tspl::run(cfg);
}
