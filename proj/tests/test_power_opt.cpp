#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "ggmacwt/oracle.hpp"
#include "ggmacwt/power_opt.hpp"
#include "support/generators.hpp"

using namespace ggmacwt;
using boost::multiprecision::cpp_rational;
using doctest::Approx;

namespace {

// Frozen with tests/oracle/golden_values.py.
constexpr double kRateFig2 = 1.2297158093186486;
constexpr double kRateBothOn = 1.2924812503605781;
constexpr double kRateInfeasible = -0.36848279708310308;

double exact(const cpp_rational& r) { return static_cast<double>(r); }

}  // namespace

TEST_CASE("rho matches exact rational arithmetic") {
    const auto fig2 = make_standard({0.1, 0.2}, {10, 10});
    CHECK(rho(PowerAllocation{{0, 0}}, fig2) == 1.0);
    CHECK(rho(PowerAllocation{{10, 10}}, fig2) == Approx(exact(cpp_rational(4, 21))).epsilon(1e-15));
    const auto mixed = make_standard({0.5, 1.4}, {10, 10});
    CHECK(rho(PowerAllocation{{3, 5}}, mixed) == Approx(exact(cpp_rational(19, 18))).epsilon(1e-15));
}

TEST_CASE("prune_bad_users examples") {
    const auto mixed = make_standard({0.5, 1.4}, {10, 10});
    const PowerAllocation pruned = prune_bad_users(PowerAllocation{{3, 5}}, mixed);
    CHECK(pruned.p == std::vector<double>{3, 0});
    CHECK(rho(pruned, mixed) == Approx(exact(cpp_rational(5, 8))).epsilon(1e-15));

    const auto good = make_standard({0.1, 0.9}, {10, 10});
    CHECK(prune_bad_users(PowerAllocation{{1, 2}}, good).p == std::vector<double>{1, 2});

    const auto bad = make_standard({1.0, 1.4}, {10, 10});
    const PowerAllocation silent = prune_bad_users(PowerAllocation{{1, 2}}, bad);
    CHECK(silent.p == std::vector<double>{0, 0});
    CHECK(rho(silent, bad) == 1.0);
}

TEST_CASE("max_sum_rate examples") {
    const SumRateSolution fig2 = max_sum_rate(make_standard({0.1, 0.2}, {10, 10}));
    CHECK(fig2.limiting_user == 1);
    CHECK(fig2.p_star.p == std::vector<double>{10, 0});
    CHECK(fig2.transmitting == std::vector<std::size_t>{0});
    CHECK(fig2.sum_rate == Approx(kRateFig2).epsilon(1e-14));
    CHECK(fig2.rho_star == Approx(2.0 / 11.0).epsilon(1e-15));

    const SumRateSolution both = max_sum_rate(make_standard({0.1, 0.15}, {10, 10}));
    CHECK(both.limiting_user == 2);
    CHECK(both.p_star.p == std::vector<double>{10, 10});
    CHECK(both.sum_rate == Approx(kRateBothOn).epsilon(1e-14));

    const SumRateSolution none = max_sum_rate(make_standard({1.2, 1.4}, {3, 7}));
    CHECK(none.limiting_user == 0);
    CHECK(none.p_star.p == std::vector<double>{0, 0});
    CHECK(none.sum_rate == 0.0);
    CHECK(none.rho_star == 1.0);
    CHECK(none.transmitting.empty());
}

TEST_CASE("max_sum_rate maps the allocation back to original user order") {
    const SumRateSolution sol = max_sum_rate(make_standard({1.4, 0.2, 0.1}, {5, 10, 10}));
    CHECK(sol.p_star.p == std::vector<double>{0, 0, 10});
    CHECK(sol.transmitting == std::vector<std::size_t>{2});
}

TEST_CASE("a user exactly on the threshold stays silent") {
    // After user 1 at full power rho = (1 + 1) / 11 = h2.
    const SumRateSolution sol = max_sum_rate(make_standard({0.1, 2.0 / 11.0}, {10, 10}));
    CHECK(sol.p_star.p == std::vector<double>{10, 0});
    // h = 1 counts as a bad user.
    const SumRateSolution unit = max_sum_rate(make_standard({1.0}, {10}));
    CHECK(unit.p_star.p == std::vector<double>{0});
}

TEST_CASE("sum_rate_at examples") {
    CHECK(sum_rate_at(PowerAllocation{{0, 0}}, make_standard({0.1, 0.2}, {10, 10})) == 0.0);
    CHECK(sum_rate_at(PowerAllocation{{10, 0}}, make_standard({0.1, 0.2}, {10, 10})) ==
          Approx(kRateFig2).epsilon(1e-14));
    CHECK(sum_rate_at(PowerAllocation{{1, 1}}, make_standard({2, 2}, {5, 5})) ==
          Approx(kRateInfeasible).epsilon(1e-14));
}

TEST_CASE("closed form matches the corner grid oracle") {
    testing::Gen gen(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k_users = static_cast<std::size_t>(gen.integer(2, 5));
        const auto ch = gen.channel(k_users, 0.0, 2.0);
        const SumRateSolution sol = max_sum_rate(ch);
        const auto oracle = grid_max_sum_rate(ch, GridSpec{k_users <= 3 ? 11 : 6, true});
        CHECK(std::abs(sol.sum_rate - oracle.rate) <= 1e-9);
        CHECK(is_feasible(sol.p_star, ch).feasible);
        for (std::size_t k = 0; k < k_users; ++k)
            CHECK((sol.p_star.p[k] == 0.0 || sol.p_star.p[k] == ch.p_max[k]));
    }
}

TEST_CASE("closed form dominates an off-corner grid within Lipschitz slack") {
    testing::Gen gen(32);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k_users = static_cast<std::size_t>(gen.integer(2, 4));
        const auto ch = gen.channel(k_users, 0.0, 1.0);
        const int steps = 9;
        const SumRateSolution sol = max_sum_rate(ch);
        const auto oracle = grid_max_sum_rate(ch, GridSpec{steps, false});
        CHECK(sol.sum_rate >= oracle.rate - 1e-9);
        // |d rate / d P_k| <= (1 + h_k) / (2 ln 2); each coordinate is within
        // half a cell of some midpoint.
        double slack = 0;
        for (std::size_t k = 0; k < k_users; ++k)
            slack += (1 + ch.h[k]) / (2 * std::numbers::ln2) * ch.p_max[k] / (2.0 * steps);
        CHECK(sol.sum_rate <= oracle.rate + slack);
    }
}

TEST_CASE("threshold structure of the optimum") {
    testing::Gen gen(33);
    for (int trial = 0; trial < 500; ++trial) {
        const auto ch = gen.channel(static_cast<std::size_t>(gen.integer(1, 16)), 0.0, 2.0);
        const SumRateSolution sol = max_sum_rate(ch);
        CHECK(sol.rho_star <= 1.0);
        CHECK(sol.sum_rate >= 0.0);
        for (std::size_t k = 0; k < ch.users(); ++k) {
            if (sol.p_star.p[k] > 0)
                CHECK(ch.h[k] < sol.rho_star + 1e-12);
            else if (ch.p_max[k] > 0)
                CHECK(ch.h[k] >= sol.rho_star - 1e-12);
        }
        // rho' of a transmitting user is negative, of a silent one nonnegative.
        double total = 1;
        for (double p : sol.p_star.p) total += p;
        for (std::size_t k = 0; k < ch.users(); ++k) {
            const double slope = (ch.h[k] - sol.rho_star) / total;
            if (sol.p_star.p[k] > 0) CHECK(slope < 1e-12);
        }
    }
}

TEST_CASE("raising a transmitting user's power cap never lowers the sum rate") {
    testing::Gen gen(34);
    for (int trial = 0; trial < 300; ++trial) {
        auto ch = gen.channel(static_cast<std::size_t>(gen.integer(1, 6)), 0.0, 2.0);
        const SumRateSolution before = max_sum_rate(ch);
        if (before.transmitting.empty()) continue;
        ch.p_max[before.transmitting.front()] += gen.uniform(0.0, 10.0);
        CHECK(max_sum_rate(ch).sum_rate >= before.sum_rate - 1e-12);
    }
}

TEST_CASE("pruning bad users never raises rho") {
    testing::Gen gen(35);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto ch = gen.channel(static_cast<std::size_t>(gen.integer(1, 8)), 0.0, 2.5);
        const auto p = gen.power_in_box(ch);
        const PowerAllocation q = prune_bad_users(p, ch);
        CHECK(rho(q, ch) <= rho(p, ch) + 1e-12);
    }
}

TEST_CASE("the optimal allocation does not depend on the rate unit") {
    testing::Gen gen(36);
    for (int trial = 0; trial < 200; ++trial) {
        auto ch = gen.channel(static_cast<std::size_t>(gen.integer(1, 6)), 0.0, 2.0);
        const SumRateSolution bits = max_sum_rate(ch);
        ch.rate_unit = RateUnit::Nats;
        const SumRateSolution nats = max_sum_rate(ch);
        CHECK(bits.p_star.p == nats.p_star.p);
        CHECK(nats.sum_rate == Approx(bits.sum_rate * std::numbers::ln2).epsilon(1e-12));
    }
}
