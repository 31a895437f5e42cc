// Sum secrecy rate maximization over the allowable power set.
#pragma once

#include <vector>

#include "ggmacwt/channel.hpp"
#include "ggmacwt/region.hpp"

namespace ggmacwt {

/// Users with h_k >= 1 - kBadUserTol are treated as having h_k >= 1.
inline constexpr double kBadUserTol = 1e-12;
/// Relative tolerance for a user sitting exactly on the rho threshold.
inline constexpr double kThresholdTieTol = 1e-12;

/// (1 + sum h_k P_k) / (1 + sum P_k). Minimizing it maximizes the sum rate.
double rho(const PowerAllocation& power, const StandardChannel& ch);

/// Zero the power of every user with h_k >= 1; never increases rho.
PowerAllocation prune_bad_users(const PowerAllocation& power, const StandardChannel& ch);

/// g(sum P_k) - g(sum h_k P_k). Negative for some allocations outside the
/// allowable set; callers decide what to do with that.
double sum_rate_at(const PowerAllocation& power, const StandardChannel& ch);

struct SumRateSolution {
    PowerAllocation p_star;  ///< original user order
    /// Number of users at full power in h-sorted order; 0 means silence.
    std::size_t limiting_user = 0;
    /// Original indices of users transmitting with positive power, ascending.
    std::vector<std::size_t> transmitting;
    double sum_rate = 0.0;
    double rho_star = 1.0;
    RateUnit rate_unit = RateUnit::Bits;
};

/// Threshold allocation: after sorting by h and discarding users with
/// h_k >= 1, the first l users transmit at P_k,max and the rest stay silent,
/// where l is the first index with rho_l <= h_{l+1}. A user exactly on the
/// threshold is kept silent.
SumRateSolution max_sum_rate(const StandardChannel& ch);

}  // namespace ggmacwt
