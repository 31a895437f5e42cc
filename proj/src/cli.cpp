#include "ggmacwt/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ggmacwt/collaborative.hpp"
#include "ggmacwt/oracle.hpp"
#include "ggmacwt/power_opt.hpp"
#include "ggmacwt/region.hpp"
#include "ggmacwt/serialize.hpp"

namespace ggmacwt::cli {

namespace {

constexpr double kSumRateVerifyTol = 1e-9;

struct Outcome {
    std::string document;
    int status = kExitOk;
    std::string diagnostic;
};

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Outcome document(std::string text) {
    Outcome out;
    out.document = std::move(text);
    return out;
}

StandardChannel load(const RunConfig& config) {
    StandardChannel ch = load_channel_file(config.input_path).standard;
    if (config.unit_override) ch.rate_unit = *config.unit_override;
    return ch;
}

void require_users(const StandardChannel& ch, std::size_t n, const char* what) {
    if (ch.users() != n)
        throw ValidationError("users", std::string(what) + " requires exactly " + std::to_string(n) +
                                           " users, got " + std::to_string(ch.users()));
}

PowerAllocation power_of(const RunConfig& config, const StandardChannel& ch) {
    PowerAllocation power{config.power};
    power.validate_against(ch);
    return power;
}

int oracle_steps(const RunConfig& config, std::size_t users) {
    if (config.grid_steps_set) return config.grid_steps;
    int steps = config.grid_steps;
    while (steps > 2 && std::pow(steps, static_cast<double>(users)) > kMaxGridPoints) --steps;
    return steps;
}

Outcome run_standardize(const RunConfig& config) {
    return document(dump(to_json(load(config))));
}

Outcome run_feasible(const RunConfig& config) {
    const StandardChannel ch = load(config);
    if (config.power.empty()) throw ValidationError("power", "is required for `feasible`");
    const PowerAllocation power = power_of(config, ch);
    Json doc = to_json(is_feasible(power, ch), ch.rate_unit);
    doc["power"] = power.p;
    return document(dump(doc));
}

Outcome run_region(const RunConfig& config) {
    const StandardChannel ch = load(config);
    const bool given = !config.power.empty();
    const PowerAllocation power = given ? power_of(config, ch) : PowerAllocation{ch.p_max};
    const RateRegion region = build_region(power, ch);
    if (config.format == Format::Csv) {
        require_users(ch, 2, "region CSV output");
        std::ostringstream os;
        write_vertices_csv(os, region);
        return document(os.str());
    }
    Json doc;
    doc["power_source"] = given ? "given" : "p_max";
    doc["power"] = power.p;
    const Json body = to_json(region, ch.rate_unit);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    return document(dump(doc));
}

Outcome run_maxsum(const RunConfig& config) {
    const StandardChannel ch = load(config);
    const SumRateSolution sol = max_sum_rate(ch);
    Json doc = to_json(sol);
    Outcome outcome;
    if (config.verify) {
        const GridSpec spec{oracle_steps(config, ch.users()), true};
        const SumRateGridResult oracle = grid_max_sum_rate(ch, spec);
        const double gap = sol.sum_rate - oracle.rate;
        doc["verify"] = Json{{"grid_steps", spec.steps_per_axis},
                             {"points", oracle.points},
                             {"oracle_p", oracle.best.p},
                             {"oracle_rate", oracle.rate},
                             {"gap", gap},
                             {"tolerance", kSumRateVerifyTol}};
        if (std::abs(gap) > kSumRateVerifyTol) {
            outcome.status = kExitInternal;
            outcome.diagnostic = "closed-form sum rate differs from the grid oracle by " + format_double(gap);
        }
    }
    outcome.document = dump(doc);
    return outcome;
}

Outcome run_jam_sweep(const RunConfig& config, const StandardChannel& ch) {
    require_users(ch, 2, "jamming sweep");
    const TwoUserChannel two = TwoUserChannel::from_standard(ch);
    const double p1 = config.p1.value_or(two.p1_max());
    const double lo = config.p2_lo.value_or(0.0);
    const double hi = config.p2_hi.value_or(two.p2_max());
    const double step = config.step.value_or(hi > lo ? (hi - lo) / 100.0 : 1.0);
    std::ostringstream os;
    write_jam_sweep_csv(os, jam_sweep(two, p1, lo, hi, step, ch.rate_unit));
    return document(os.str());
}

Outcome run_jam(const RunConfig& config) {
    const StandardChannel ch = load(config);
    require_users(ch, 2, "jamming");
    if (config.jam_sweep) return run_jam_sweep(config, ch);

    const TwoUserChannel two = TwoUserChannel::from_standard(ch);
    const JammingSolution sol = solve_jamming(two, ch.rate_unit);
    Json doc = to_json(sol);
    Outcome outcome;
    if (config.verify) {
        const bool both_good = sol.case_tag == JamCase::Degenerate && sol.branch == JamBranch::NoJam;
        double oracle_rate = 0.0;
        double tolerance = config.verify_tol;
        Json verify;
        if (both_good) {
            // No jammer: the optimum is over the allowable power set instead.
            const StandardChannel relabeled{{two.h1(), two.h2()}, {two.p1_max(), two.p2_max()}, ch.rate_unit};
            const GridSpec spec{oracle_steps(config, 2), true};
            const SumRateGridResult oracle = grid_max_sum_rate(relabeled, spec);
            oracle_rate = std::max(0.0, oracle.rate);
            tolerance = kSumRateVerifyTol;
            verify = Json{{"kind", "sum_rate"}, {"grid_steps", spec.steps_per_axis}, {"oracle_p", oracle.best.p}};
        } else {
            const GridSpec p2_axis = GridSpec::with_step(two.p2_max(), config.jam_grid_step);
            const JammingGridResult oracle = grid_max_jamming(two, GridSpec{2, true}, p2_axis, ch.rate_unit);
            oracle_rate = oracle.rate;
            verify = Json{{"kind", "jamming"},
                          {"p2_grid_steps", p2_axis.steps_per_axis},
                          {"oracle_p", {oracle.p1, oracle.p2}}};
        }
        const double gap = sol.secrecy_rate - oracle_rate;
        verify["oracle_rate"] = oracle_rate;
        verify["gap"] = gap;
        verify["tolerance"] = tolerance;
        doc["verify"] = std::move(verify);
        // The grid can only under-estimate the true optimum.
        if (gap < -kSumRateVerifyTol || gap > tolerance) {
            outcome.status = kExitInternal;
            outcome.diagnostic = "closed-form jamming rate differs from the grid oracle by " + format_double(gap);
        }
    }
    outcome.document = dump(doc);
    return outcome;
}

Outcome run_sweep(const RunConfig& config) {
    const StandardChannel ch = load(config);
    if (config.sweep_kind == SweepKind::Jam) return run_jam_sweep(config, ch);

    require_users(ch, 2, "region sweep");
    const auto sweep = union_sweep(ch, config.grid_steps);
    if (config.format == Format::Csv) {
        std::ostringstream os;
        write_region_sweep_csv(os, sweep);
        return document(os.str());
    }
    Json doc;
    doc["reading"] = "regions at every feasible grid power; their union approximates the achievable region";
    doc["grid_steps"] = config.grid_steps;
    Json entries = Json::array();
    for (const SweepEntry& e : sweep) entries.push_back(Json{{"power", e.power.p}, {"region", to_json(e.region, ch.rate_unit)}});
    doc["entries"] = std::move(entries);
    doc["rate_unit"] = to_string(ch.rate_unit);
    return document(dump(doc));
}

Outcome dispatch(const RunConfig& config) {
    switch (config.subcommand) {
        case Subcommand::Standardize: return run_standardize(config);
        case Subcommand::Feasible: return run_feasible(config);
        case Subcommand::Region: return run_region(config);
        case Subcommand::MaxSum: return run_maxsum(config);
        case Subcommand::Jam: return run_jam(config);
        case Subcommand::Sweep: return run_sweep(config);
    }
    throw InternalError("unknown subcommand");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Outcome outcome;
    try {
        outcome = dispatch(config);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }

    if (config.output_path.empty()) {
        out << outcome.document;
    } else {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file) {
            err << "error: output: cannot open \"" << config.output_path << "\"\n";
            return kExitValidation;
        }
        file << outcome.document;
    }
    if (!outcome.diagnostic.empty()) err << "verify: " << outcome.diagnostic << '\n';
    return outcome.status;
}

}  // namespace ggmacwt::cli
