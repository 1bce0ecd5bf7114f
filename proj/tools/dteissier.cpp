#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dt/cli.hpp"

namespace {

void add_data_options(CLI::App* cmd, dt::cli::RunConfig& config) {
    cmd->add_option("--data", config.data, "bundled dataset name (paper-I, paper-I-alt, paper-II) or file path")
        ->required();
    cmd->add_option("--scale-floor", config.scale_floor,
                    "divide file values by this and keep the floor");
}

void add_format_options(CLI::App* cmd, dt::cli::RunConfig& config) {
    cmd->add_option_function<std::string>(
           "--format",
           [&config](const std::string& v) {
               config.format = v == "csv" ? dt::cli::Format::Csv : dt::cli::Format::Markdown;
           },
           "output format: csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    cmd->add_option("--precision", config.precision, "decimal places printed")
        ->check(CLI::Range(0, 17));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Teissier distribution: fitting, model comparison and reliability tables"};
    app.require_subcommand(1);

    dt::cli::RunConfig config;

    auto* fit = app.add_subcommand("fit", "fit the DT distribution to a dataset");
    add_data_options(fit, config);
    fit->add_option("--method", config.method, "mle, mom or both")
        ->check(CLI::IsMember({"mle", "mom", "both"}));
    add_format_options(fit, config);
    fit->callback([&] { config.command = dt::cli::Command::Fit; });

    auto* compare = app.add_subcommand("compare", "fit several models and rank them by AIC");
    add_data_options(compare, config);
    compare->add_option("--models", config.models, "comma-separated model list")->delimiter(',');
    add_format_options(compare, config);
    compare->callback([&] { config.command = dt::cli::Command::Compare; });

    auto* describe = app.add_subcommand("describe", "moment/shape descriptives over a theta grid");
    describe->add_option("--theta-grid", config.theta_grid, "comma-separated theta values")
        ->delimiter(',');
    add_format_options(describe, config);
    describe->callback([&] { config.command = dt::cli::Command::Describe; });

    auto* ss = app.add_subcommand("ss", "stress-strength reliability matrix over theta grids");
    ss->add_option("--theta-grid", config.theta_grid, "theta_1 values (rows)")->delimiter(',');
    ss->add_option("--theta2-grid", config.theta2_grid, "theta_2 values (columns); defaults to --theta-grid")
        ->delimiter(',');
    add_format_options(ss, config);
    ss->callback([&] { config.command = dt::cli::Command::Ss; });

    auto* sample = app.add_subcommand("sample", "draw seeded iid samples");
    sample->add_option("--theta", config.theta, "DT parameter, > 1")->required();
    sample->add_option("--n", config.n, "number of draws")->check(CLI::PositiveNumber);
    sample->add_option("--seed", config.seed, "RNG seed");
    sample->add_option("--out", config.out_path, "output file (default stdout)");
    sample->callback([&] { config.command = dt::cli::Command::Sample; });

    auto* emit = app.add_subcommand("emit-points", "write plot-ready (x, f(x)) CSV points");
    emit->add_option("--fn", config.fn, "pmf, cdf, hrf or ll-profile")
        ->check(CLI::IsMember({"pmf", "cdf", "hrf", "ll-profile"}));
    emit->add_option("--theta", config.theta, "DT parameter for pmf/cdf/hrf");
    emit->add_option("--max-y", config.max_y, "largest support point emitted")
        ->check(CLI::NonNegativeNumber);
    emit->add_option("--data", config.data, "dataset for ll-profile");
    emit->add_option("--scale-floor", config.scale_floor,
                     "divide file values by this and keep the floor");
    emit->add_option("--out", config.out_path, "output file (default stdout)");
    emit->add_option("--precision", config.precision, "decimal places printed")
        ->check(CLI::Range(0, 17));
    emit->callback([&] { config.command = dt::cli::Command::EmitPoints; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return dt::cli::kExitParse;
    }

    return dt::cli::run(config, std::cout, std::cerr);
}
