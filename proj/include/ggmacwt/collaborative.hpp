// Two-user collaborative secrecy: a user that would stay silent under sum
// rate maximization transmits white noise instead, hurting the eavesdropper
// more than the intended receiver.
#pragma once

#include <array>
#include <vector>

#include "ggmacwt/channel.hpp"

namespace ggmacwt {

/// Two users relabeled so that h1 <= h2. User 2 is the candidate jammer.
class TwoUserChannel {
public:
    /// Users are given in their original order (index 0 and 1) and relabeled
    /// by non-decreasing h; ties keep the original order.
    static TwoUserChannel from_users(double h_a, double p_max_a, double h_b, double p_max_b);
    static TwoUserChannel from_standard(const StandardChannel& ch);

    double h1() const noexcept { return h1_; }
    double h2() const noexcept { return h2_; }
    double p1_max() const noexcept { return p1_max_; }
    double p2_max() const noexcept { return p2_max_; }
    /// permutation()[i] is the original index of relabeled user i + 1.
    const std::array<std::size_t, 2>& permutation() const noexcept { return perm_; }

private:
    TwoUserChannel() = default;

    double h1_ = 0.0;
    double h2_ = 0.0;
    double p1_max_ = 0.0;
    double p2_max_ = 0.0;
    std::array<std::size_t, 2> perm_{0, 1};
};

enum class JamBranch { NoJam, InteriorRoot, FullJam, AllSilent };
enum class JamCase { A, B, Degenerate };

const char* to_string(JamBranch branch);
const char* to_string(JamCase tag);

struct JammingSolution {
    double p1 = 0.0;  ///< relabeled user 1 (the better user)
    double p2 = 0.0;  ///< relabeled user 2 (the jammer)
    double secrecy_rate = 0.0;  ///< clamped at 0
    JamBranch branch = JamBranch::NoJam;
    JamCase case_tag = JamCase::Degenerate;
    std::array<std::size_t, 2> permutation{0, 1};
    RateUnit rate_unit = RateUnit::Bits;

    /// Powers indexed by original user.
    std::array<double, 2> original_powers() const;
};

/// g(P1 / (1 + P2)) - g(h1 P1 / (1 + h2 P2)); may be negative.
double jam_objective(double p1, double p2, const TwoUserChannel& ch, RateUnit unit = RateUnit::Bits);

/// Numerator of d/dP1 of the negated objective ratio. Negative means user 1
/// should transmit at full power; positive means it should stay silent.
double psi1(double p2, const TwoUserChannel& ch);

struct JamRoots {
    double discriminant = 0.0;  ///< D
    double lo = 0.0;            ///< p(2), the root with -sqrt(D)
    double hi = 0.0;            ///< p(1), the candidate jamming power
};

/// Roots of the stationarity parabola in P2 for a fixed P1. Requires
/// h2 > h1 and h2 >= 1.
JamRoots jam_roots(double p1, const TwoUserChannel& ch);

/// P1 h2 (h2 - h1) (P2 - p(1)) (P2 - p(2)): numerator of d/dP2 of the
/// negated objective ratio.
double psi2(double p1, double p2, const TwoUserChannel& ch);

/// h1 < 1 <= h2: user 1 always transmits at full power; user 2 jams at
/// p(1) clipped into [0, P2,max].
JammingSolution solve_case_a(const TwoUserChannel& ch, RateUnit unit = RateUnit::Bits);

/// 1 <= h1 < h2: nothing is achievable unless the jammer can push P2 past
/// (h1 - 1) / (h2 - h1); then user 1 transmits at full power.
JammingSolution solve_case_b(const TwoUserChannel& ch, RateUnit unit = RateUnit::Bits);

/// Picks the applicable case. Two good users need no jammer and get the sum
/// rate optimum; equal gains at or above 1 leave everyone silent.
JammingSolution solve_jamming(const TwoUserChannel& ch, RateUnit unit = RateUnit::Bits);

struct JamSweepRow {
    double p2 = 0.0;
    double objective = 0.0;
};

/// Raw (unclamped) objective at fixed P1 for P2 = lo, lo + step, ..., <= hi.
std::vector<JamSweepRow> jam_sweep(const TwoUserChannel& ch, double p1, double p2_lo, double p2_hi,
                                   double step, RateUnit unit = RateUnit::Bits);

}  // namespace ggmacwt
