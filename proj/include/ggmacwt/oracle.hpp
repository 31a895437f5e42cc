// Exhaustive grid searches used to cross-check the closed-form optimizers.
// Nothing here calls into power_opt or collaborative.
#pragma once

#include <cstddef>
#include <vector>

#include "ggmacwt/channel.hpp"
#include "ggmacwt/collaborative.hpp"
#include "ggmacwt/region.hpp"

namespace ggmacwt {

inline constexpr double kMaxGridPoints = 1e7;

struct GridSpec {
    int steps_per_axis = 11;
    /// true: {0, d, ..., P_max} with d = P_max / (steps - 1), corners exact.
    /// false: cell midpoints (i + 1/2) P_max / steps, which never hit a corner.
    bool include_corners = true;

    /// Smallest corner-including grid whose spacing is at most `step`.
    static GridSpec with_step(double p_max, double step);
};

/// Points of one grid axis; a zero-width axis collapses to {0}.
std::vector<double> grid_axis(double p_max, const GridSpec& spec);

struct SumRateGridResult {
    PowerAllocation best;
    double rate = 0.0;
    std::size_t points = 0;
};

/// Maximizes g(sum P) - g(sum h P) over the grid points inside the allowable
/// power set. Ties go to the lexicographically smallest P.
SumRateGridResult grid_max_sum_rate(const StandardChannel& ch, const GridSpec& spec);

struct JammingGridResult {
    double p1 = 0.0;
    double p2 = 0.0;
    double rate = 0.0;  ///< clamped at 0
    double raw_objective = 0.0;
    std::size_t points = 0;
};

/// Maximizes the jamming objective over the box grid (no allowable-set
/// filter). Ties go to the lexicographically smallest (P1, P2).
JammingGridResult grid_max_jamming(const TwoUserChannel& ch, const GridSpec& p1_axis,
                                   const GridSpec& p2_axis, RateUnit unit = RateUnit::Bits);

}  // namespace ggmacwt
