#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ggmacwt/cli.hpp"

using ggmacwt::cli::Format;
using ggmacwt::cli::RunConfig;
using ggmacwt::cli::Subcommand;
using ggmacwt::cli::SweepKind;

namespace {

struct Raw {
    std::string format;
    std::string unit;
    std::string kind;
    double p1 = 0, p2_lo = 0, p2_hi = 0, step = 0;
};

CLI::App* add_command(CLI::App& app, const char* name, const char* help, RunConfig& config, Raw& raw) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", config.input_path, "Channel description (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", config.output_path, "Write the result here instead of stdout");
    sub->add_option("--unit", raw.unit, "Override the channel's rate unit")->check(CLI::IsMember({"bits", "nats"}));
    return sub;
}

void add_power(CLI::App* sub, RunConfig& config) {
    sub->add_option("-p,--power", config.power, "Standardized per-user powers, comma separated")->delimiter(',');
}

void add_format(CLI::App* sub, Raw& raw) {
    sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_jam_sweep_range(CLI::App* sub, Raw& raw) {
    sub->add_option("--p1", raw.p1, "Fixed P1 for the jamming sweep (default P1,max)");
    sub->add_option("--p2-min", raw.p2_lo, "Start of the P2 range (default 0)");
    sub->add_option("--p2-max", raw.p2_hi, "End of the P2 range (default P2,max)");
    sub->add_option("--step", raw.step, "P2 spacing (default range / 100)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy rate regions, sum-rate optimal powers and cooperative jamming for the "
                 "Gaussian multiple-access wire-tap channel"};
    app.require_subcommand(1);

    RunConfig config;
    Raw raw;
    int grid_steps = 11;

    auto* standardize = add_command(app, "standardize", "Convert a raw channel to standard form", config, raw);

    auto* feasible = add_command(app, "feasible", "Check a power vector against the allowable set", config, raw);
    add_power(feasible, config);

    auto* region = add_command(app, "region", "Achievable region at a fixed power vector", config, raw);
    add_power(region, config);
    add_format(region, raw);

    auto* maxsum = add_command(app, "maxsum", "Sum-rate maximizing power allocation", config, raw);
    maxsum->add_flag("--verify", config.verify, "Cross-check against the grid oracle");
    maxsum->add_option("--grid-steps", grid_steps, "Oracle grid points per axis")->check(CLI::PositiveNumber);

    auto* jam = add_command(app, "jam", "Two-user cooperative jamming optimum", config, raw);
    jam->add_flag("--verify", config.verify, "Cross-check against the grid oracle");
    jam->add_option("--kind", raw.kind, "solve (default) or sweep")->check(CLI::IsMember({"solve", "sweep"}));
    jam->add_option("--grid-step", config.jam_grid_step, "Oracle P2 spacing")->check(CLI::PositiveNumber);
    jam->add_option("--verify-tol", config.verify_tol, "Allowed closed-form/oracle gap");
    jam->add_option("--grid-steps", grid_steps, "Oracle grid points per axis when no user jams")
        ->check(CLI::PositiveNumber);
    add_jam_sweep_range(jam, raw);

    auto* sweep = add_command(app, "sweep", "Data sweeps for plotting (CSV by default)", config, raw);
    sweep->add_option("--kind", raw.kind, "region (default) or jam")->check(CLI::IsMember({"region", "jam"}));
    sweep->add_option("--grid-steps", grid_steps, "Region sweep grid points per axis")->check(CLI::PositiveNumber);
    add_format(sweep, raw);
    add_jam_sweep_range(sweep, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : ggmacwt::cli::kExitValidation;
    }

    const std::map<CLI::App*, Subcommand> commands{
        {standardize, Subcommand::Standardize}, {feasible, Subcommand::Feasible},
        {region, Subcommand::Region},           {maxsum, Subcommand::MaxSum},
        {jam, Subcommand::Jam},                 {sweep, Subcommand::Sweep},
    };
    CLI::App* chosen = app.get_subcommands().front();
    config.subcommand = commands.at(chosen);

    const auto given = [chosen](const char* name) {
        const CLI::Option* opt = chosen->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };

    config.grid_steps = grid_steps;
    config.grid_steps_set = given("--grid-steps");
    if (!raw.unit.empty()) config.unit_override = ggmacwt::rate_unit_from_string(raw.unit);
    if (raw.format.empty()) {
        config.format = config.subcommand == Subcommand::Sweep ? Format::Csv : Format::Json;
    } else {
        config.format = raw.format == "csv" ? Format::Csv : Format::Json;
    }
    config.jam_sweep = raw.kind == "sweep";
    config.sweep_kind = raw.kind == "jam" ? SweepKind::Jam : SweepKind::Region;
    if (given("--p1")) config.p1 = raw.p1;
    if (given("--p2-min")) config.p2_lo = raw.p2_lo;
    if (given("--p2-max")) config.p2_hi = raw.p2_hi;
    if (given("--step")) config.step = raw.step;

    return ggmacwt::cli::run(config, std::cout, std::cerr);
}
