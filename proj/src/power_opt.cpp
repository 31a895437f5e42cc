#include "ggmacwt/power_opt.hpp"

#include <algorithm>
#include <limits>

namespace ggmacwt {

namespace {

bool is_bad_user(double h) { return h >= 1.0 - kBadUserTol; }

}  // namespace

double rho(const PowerAllocation& power, const StandardChannel& ch) {
    power.validate_against(ch);
    double num = 1.0;
    double den = 1.0;
    for (std::size_t k = 0; k < ch.users(); ++k) {
        num += ch.h[k] * power.p[k];
        den += power.p[k];
    }
    return num / den;
}

PowerAllocation prune_bad_users(const PowerAllocation& power, const StandardChannel& ch) {
    power.validate_against(ch);
    PowerAllocation out = power;
    for (std::size_t k = 0; k < ch.users(); ++k)
        if (is_bad_user(ch.h[k])) out.p[k] = 0.0;
    return out;
}

double sum_rate_at(const PowerAllocation& power, const StandardChannel& ch) {
    power.validate_against(ch);
    double total = 0.0;
    double eve = 0.0;
    for (std::size_t k = 0; k < ch.users(); ++k) {
        total += power.p[k];
        eve += ch.h[k] * power.p[k];
    }
    return g(total, ch.rate_unit) - g(eve, ch.rate_unit);
}

SumRateSolution max_sum_rate(const StandardChannel& ch) {
    ch.validate();
    const SortedChannel sorted = sort_by_gain(ch);
    const auto& h = sorted.channel.h;
    const auto& p_max = sorted.channel.p_max;
    const auto good = static_cast<std::size_t>(
        std::count_if(h.begin(), h.end(), [](double v) { return !is_bad_user(v); }));

    // Sorted order means the good users form a prefix.
    std::size_t l = 0;
    double num = 1.0;
    double den = 1.0;
    for (;; ++l) {
        const double current = num / den;
        const double next_h = l < good ? h[l] : std::numeric_limits<double>::infinity();
        if (next_h >= current * (1.0 - kThresholdTieTol)) break;
        num += h[l] * p_max[l];
        den += p_max[l];
    }

    std::vector<double> sorted_power(ch.users(), 0.0);
    std::copy_n(p_max.begin(), l, sorted_power.begin());

    SumRateSolution sol;
    sol.p_star.p = unpermute(sorted_power, sorted.permutation);
    sol.limiting_user = l;
    for (std::size_t k = 0; k < ch.users(); ++k)
        if (sol.p_star.p[k] > 0.0) sol.transmitting.push_back(k);
    sol.sum_rate = sum_rate_at(sol.p_star, ch);
    sol.rho_star = rho(sol.p_star, ch);
    sol.rate_unit = ch.rate_unit;

    if (!is_feasible(sol.p_star, ch))
        throw InternalError("threshold allocation left the allowable power set");
    return sol;
}

}  // namespace ggmacwt
