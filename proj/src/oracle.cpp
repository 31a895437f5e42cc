#include "ggmacwt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace ggmacwt {

namespace {

void check_spec(const GridSpec& spec, const char* field) {
    if (spec.steps_per_axis < 2) throw ValidationError(field, "steps_per_axis must be >= 2");
}

void check_size(double points) {
    if (points > kMaxGridPoints)
        throw ValidationError("grid", "grid has " + std::to_string(points) + " points, limit is 1e7");
}

}  // namespace

GridSpec GridSpec::with_step(double p_max, double step) {
    if (!(step > 0.0)) throw ValidationError("step", "must be > 0");
    const double intervals = std::ceil(p_max / step - 1e-9);
    check_size(intervals + 1.0);
    return GridSpec{std::max(2, static_cast<int>(intervals) + 1), true};
}

std::vector<double> grid_axis(double p_max, const GridSpec& spec) {
    check_spec(spec, "grid");
    if (p_max == 0.0) return {0.0};
    const int n = spec.steps_per_axis;
    std::vector<double> axis(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        axis[static_cast<std::size_t>(i)] =
            spec.include_corners ? p_max * (static_cast<double>(i) / (n - 1))
                                 : p_max * ((static_cast<double>(i) + 0.5) / n);
    }
    return axis;
}

SumRateGridResult grid_max_sum_rate(const StandardChannel& ch, const GridSpec& spec) {
    ch.validate();
    check_spec(spec, "grid");
    const std::size_t k_users = ch.users();
    check_size(std::pow(static_cast<double>(spec.steps_per_axis), static_cast<double>(k_users)));

    std::vector<std::vector<double>> axes;
    for (double p_max : ch.p_max) axes.push_back(grid_axis(p_max, spec));

    // Odometer over the grid with user 0 as the most significant digit, so
    // points are visited in lexicographic order and a strict improvement
    // test keeps the smallest maximizer.
    std::vector<std::size_t> digit(k_users, 0);
    PowerAllocation point{std::vector<double>(k_users)};
    std::optional<SumRateGridResult> best;
    std::size_t visited = 0;
    for (bool done = false; !done;) {
        double total = 0.0;
        double eve = 0.0;
        for (std::size_t k = 0; k < k_users; ++k) {
            point.p[k] = axes[k][digit[k]];
            total += point.p[k];
            eve += ch.h[k] * point.p[k];
        }
        ++visited;
        const double rate = g(total, ch.rate_unit) - g(eve, ch.rate_unit);
        // The feasibility scan is the expensive part; only run it on candidates.
        if ((!best || rate > best->rate) && is_feasible(point, ch)) best = SumRateGridResult{point, rate, 0};

        for (std::size_t k = k_users;;) {
            if (k == 0) {
                done = true;
                break;
            }
            --k;
            if (++digit[k] < axes[k].size()) break;
            digit[k] = 0;
        }
    }

    if (!best) throw ValidationError("grid", "no grid point lies in the allowable power set");
    best->points = visited;
    return *best;
}

JammingGridResult grid_max_jamming(const TwoUserChannel& ch, const GridSpec& p1_axis,
                                   const GridSpec& p2_axis, RateUnit unit) {
    check_spec(p1_axis, "p1_grid");
    check_spec(p2_axis, "p2_grid");
    check_size(static_cast<double>(p1_axis.steps_per_axis) * p2_axis.steps_per_axis);

    const double h1 = ch.h1(), h2 = ch.h2();
    JammingGridResult best;
    bool have_best = false;
    std::size_t visited = 0;
    for (double p1 : grid_axis(ch.p1_max(), p1_axis)) {
        for (double p2 : grid_axis(ch.p2_max(), p2_axis)) {
            ++visited;
            const double value = g(p1 / (1.0 + p2), unit) - g(h1 * p1 / (1.0 + h2 * p2), unit);
            if (!have_best || value > best.raw_objective) {
                best.p1 = p1;
                best.p2 = p2;
                best.raw_objective = value;
                have_best = true;
            }
        }
    }
    best.rate = std::max(0.0, best.raw_objective);
    best.points = visited;
    return best;
}

}  // namespace ggmacwt
