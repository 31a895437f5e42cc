#include "ggmacwt/collaborative.hpp"

#include <algorithm>
#include <cmath>

#include "ggmacwt/power_opt.hpp"
#include "ggmacwt/region.hpp"

namespace ggmacwt {

namespace {

bool is_bad_user(double h) { return h >= 1.0 - kBadUserTol; }

constexpr double kEqualGainTol = 1e-12;

void check_power(double p, const char* field) {
    if (!std::isfinite(p) || p < 0.0) throw ValidationError(field, "must be finite and >= 0");
}

JammingSolution base_solution(const TwoUserChannel& ch, JamCase tag, RateUnit unit) {
    JammingSolution sol;
    sol.case_tag = tag;
    sol.permutation = ch.permutation();
    sol.rate_unit = unit;
    return sol;
}

}  // namespace

TwoUserChannel TwoUserChannel::from_users(double h_a, double p_max_a, double h_b, double p_max_b) {
    StandardChannel ch{{h_a, h_b}, {p_max_a, p_max_b}, RateUnit::Bits};
    ch.validate();
    TwoUserChannel out;
    const bool swap = h_b < h_a;
    out.perm_ = swap ? std::array<std::size_t, 2>{1, 0} : std::array<std::size_t, 2>{0, 1};
    out.h1_ = swap ? h_b : h_a;
    out.h2_ = swap ? h_a : h_b;
    out.p1_max_ = swap ? p_max_b : p_max_a;
    out.p2_max_ = swap ? p_max_a : p_max_b;
    return out;
}

TwoUserChannel TwoUserChannel::from_standard(const StandardChannel& ch) {
    if (ch.users() != 2) throw ValidationError("users", "jamming requires exactly 2 users");
    return from_users(ch.h[0], ch.p_max[0], ch.h[1], ch.p_max[1]);
}

const char* to_string(JamBranch branch) {
    switch (branch) {
        case JamBranch::NoJam: return "NoJam";
        case JamBranch::InteriorRoot: return "InteriorRoot";
        case JamBranch::FullJam: return "FullJam";
        case JamBranch::AllSilent: return "AllSilent";
    }
    return "unknown";
}

const char* to_string(JamCase tag) {
    switch (tag) {
        case JamCase::A: return "A";
        case JamCase::B: return "B";
        case JamCase::Degenerate: return "Degenerate";
    }
    return "unknown";
}

std::array<double, 2> JammingSolution::original_powers() const {
    std::array<double, 2> out{};
    out[permutation[0]] = p1;
    out[permutation[1]] = p2;
    return out;
}

double jam_objective(double p1, double p2, const TwoUserChannel& ch, RateUnit unit) {
    check_power(p1, "p1");
    check_power(p2, "p2");
    return g(p1 / (1.0 + p2), unit) - g(ch.h1() * p1 / (1.0 + ch.h2() * p2), unit);
}

double psi1(double p2, const TwoUserChannel& ch) {
    check_power(p2, "p2");
    const double h1 = ch.h1(), h2 = ch.h2();
    return -(1.0 + h2 * p2) * ((1.0 - h1) + (h2 - h1) * p2);
}

JamRoots jam_roots(double p1, const TwoUserChannel& ch) {
    check_power(p1, "p1");
    const double h1 = ch.h1(), h2 = ch.h2();
    if (!(h2 - h1 > kEqualGainTol)) throw ValidationError("h", "jamming roots need h2 > h1");
    if (!is_bad_user(h2)) throw ValidationError("h2", "jamming roots need h2 >= 1");

    // h2 may sit a rounding error below 1, which can push D slightly negative.
    const double d = std::max(0.0, h1 * h2 * ((h2 - 1.0) + (h2 - h1) * p1) * (h2 - 1.0));
    const double sqrt_d = std::sqrt(d);
    const double denom = h2 * (h2 - h1);
    const double offset = -h2 * (1.0 - h1);
    return JamRoots{d, (offset - sqrt_d) / denom, (offset + sqrt_d) / denom};
}

double psi2(double p1, double p2, const TwoUserChannel& ch) {
    check_power(p2, "p2");
    const JamRoots r = jam_roots(p1, ch);
    return p1 * ch.h2() * (ch.h2() - ch.h1()) * (p2 - r.hi) * (p2 - r.lo);
}

JammingSolution solve_case_a(const TwoUserChannel& ch, RateUnit unit) {
    if (is_bad_user(ch.h1()) || !is_bad_user(ch.h2()))
        throw ValidationError("h", "case A requires h1 < 1 <= h2");

    JammingSolution sol = base_solution(ch, JamCase::A, unit);
    sol.p1 = ch.p1_max();
    sol.branch = JamBranch::NoJam;
    if (sol.p1 > 0.0) {
        const double root = jam_roots(sol.p1, ch).hi;
        if (root > 0.0 && root <= ch.p2_max()) {
            sol.p2 = root;
            sol.branch = JamBranch::InteriorRoot;
        } else if (root > ch.p2_max()) {
            sol.p2 = ch.p2_max();
            sol.branch = JamBranch::FullJam;
        }
    }
    sol.secrecy_rate = std::max(0.0, jam_objective(sol.p1, sol.p2, ch, unit));
    return sol;
}

JammingSolution solve_case_b(const TwoUserChannel& ch, RateUnit unit) {
    if (!is_bad_user(ch.h1()) || !(ch.h2() - ch.h1() > kEqualGainTol))
        throw ValidationError("h", "case B requires 1 <= h1 < h2");

    JammingSolution sol = base_solution(ch, JamCase::B, unit);
    const double threshold = (ch.h1() - 1.0) / (ch.h2() - ch.h1());
    if (ch.p2_max() <= threshold || ch.p1_max() == 0.0) {
        sol.branch = JamBranch::AllSilent;
        return sol;
    }
    sol.p1 = ch.p1_max();
    const double root = jam_roots(sol.p1, ch).hi;
    if (ch.p2_max() <= root) {
        sol.p2 = ch.p2_max();
        sol.branch = JamBranch::FullJam;
    } else {
        sol.p2 = root;
        sol.branch = JamBranch::InteriorRoot;
    }
    sol.secrecy_rate = std::max(0.0, jam_objective(sol.p1, sol.p2, ch, unit));
    return sol;
}

JammingSolution solve_jamming(const TwoUserChannel& ch, RateUnit unit) {
    const bool bad1 = is_bad_user(ch.h1());
    const bool bad2 = is_bad_user(ch.h2());
    if (!bad1 && !bad2) {
        const StandardChannel std_ch{{ch.h1(), ch.h2()}, {ch.p1_max(), ch.p2_max()}, unit};
        const SumRateSolution best = max_sum_rate(std_ch);
        JammingSolution sol = base_solution(ch, JamCase::Degenerate, unit);
        sol.p1 = best.p_star.p[0];
        sol.p2 = best.p_star.p[1];
        sol.secrecy_rate = std::max(0.0, best.sum_rate);
        sol.branch = JamBranch::NoJam;
        return sol;
    }
    if (!bad1) return solve_case_a(ch, unit);
    if (ch.h2() - ch.h1() > kEqualGainTol) return solve_case_b(ch, unit);

    JammingSolution sol = base_solution(ch, JamCase::Degenerate, unit);
    sol.branch = JamBranch::AllSilent;
    return sol;
}

std::vector<JamSweepRow> jam_sweep(const TwoUserChannel& ch, double p1, double p2_lo, double p2_hi,
                                   double step, RateUnit unit) {
    check_power(p1, "p1");
    check_power(p2_lo, "p2_lo");
    if (!(p2_hi >= p2_lo) || !std::isfinite(p2_hi)) throw ValidationError("p2_hi", "must be >= p2_lo");
    if (!(step > 0.0) || !std::isfinite(step)) throw ValidationError("step", "must be > 0");

    const auto intervals = static_cast<std::size_t>(std::floor((p2_hi - p2_lo) / step + 1e-9));
    if (intervals > 10'000'000) throw ValidationError("step", "sweep would exceed 1e7 rows");
    std::vector<JamSweepRow> rows;
    rows.reserve(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double p2 = p2_lo + static_cast<double>(i) * step;
        rows.push_back({p2, jam_objective(p1, p2, ch, unit)});
    }
    return rows;
}

}  // namespace ggmacwt
