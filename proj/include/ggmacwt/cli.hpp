// Command dispatch behind the ggmacwt executable. Argument parsing lives in
// tools/; this layer takes an already-parsed configuration so it can be
// exercised directly from tests.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ggmacwt/channel.hpp"

namespace ggmacwt::cli {

enum class Subcommand { Standardize, Feasible, Region, MaxSum, Jam, Sweep };
enum class Format { Json, Csv };
enum class SweepKind { Region, Jam };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

struct RunConfig {
    Subcommand subcommand = Subcommand::Standardize;
    std::string input_path;
    std::string output_path;  ///< empty writes to the supplied stream
    Format format = Format::Json;
    std::optional<RateUnit> unit_override;

    std::vector<double> power;  ///< standardized units; region defaults to p_max

    int grid_steps = 11;          ///< region sweep grid, sum-rate oracle grid
    bool grid_steps_set = false;  ///< otherwise --verify shrinks it to fit
    double jam_grid_step = 1e-3;  ///< p2 spacing of the jamming oracle grid
    bool verify = false;
    double verify_tol = 1e-5;     ///< allowed jamming closed-form/oracle gap

    SweepKind sweep_kind = SweepKind::Region;
    bool jam_sweep = false;  ///< `jam --kind sweep`
    std::optional<double> p1;
    std::optional<double> p2_lo;
    std::optional<double> p2_hi;
    std::optional<double> step;
};

/// Runs one subcommand. Diagnostics go to `err`; the result document goes
/// to `output_path` if set, otherwise to `out`. Returns the process exit
/// status: 0 on success, 1 on validation errors, 2 on internal errors
/// (including a closed-form/oracle mismatch under --verify).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ggmacwt::cli
