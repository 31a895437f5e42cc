#include "ggmacwt/region.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace ggmacwt {

namespace {

constexpr double kVertexDedupTol = 1e-12;
constexpr double kContainsTol = 1e-12;

struct SubsetSums {
    double power_in = 0.0;
    double power_out = 0.0;
    double eve_in = 0.0;
    double eve_out = 0.0;
};

SubsetSums sums_for(Subset s, const PowerAllocation& power, const StandardChannel& ch) {
    SubsetSums out;
    for (std::size_t k = 0; k < ch.users(); ++k) {
        const double pk = power.p[k];
        const double hpk = ch.h[k] * pk;
        if (s >> k & 1u) {
            out.power_in += pk;
            out.eve_in += hpk;
        } else {
            out.power_out += pk;
            out.eve_out += hpk;
        }
    }
    return out;
}

void check_subset(Subset s, std::size_t users) {
    if (s == 0) throw ValidationError("subset", "must be nonempty");
    if ((s & ~full_set(users)) != 0) throw ValidationError("subset", "refers to a user index >= K");
}

bool near(const RateVector& a, const RateVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > kVertexDedupTol) return false;
    return true;
}

void push_unique(std::vector<RateVector>& out, RateVector v) {
    for (const auto& w : out)
        if (near(w, v)) return;
    out.push_back(std::move(v));
}

// Bounds within the feasibility tolerance of zero are snapped to zero so a
// boundary allocation still produces a (degenerate) region.
std::optional<double> clamp_bound(double b) {
    if (b >= 0.0) return b;
    if (b >= -kFeasibilityTol) return 0.0;
    return std::nullopt;
}

std::vector<double> axis_points(double p_max, int steps) {
    if (p_max == 0.0) return {0.0};
    std::vector<double> axis(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        axis[static_cast<std::size_t>(i)] = p_max * (static_cast<double>(i) / (steps - 1));
    return axis;
}

}  // namespace

std::vector<std::size_t> members(Subset s) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; s != 0; ++k, s >>= 1u)
        if (s & 1u) out.push_back(k);
    return out;
}

void PowerAllocation::validate_against(const StandardChannel& ch) const {
    if (p.size() != ch.users())
        throw ValidationError("power", "expected " + std::to_string(ch.users()) + " entries, got " +
                                           std::to_string(p.size()));
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!std::isfinite(p[k]) || p[k] < 0.0)
            throw ValidationError("power[" + std::to_string(k) + "]", "must be finite and >= 0");
}

double g(double xi, RateUnit unit) {
    if (!(xi >= 0.0)) throw ValidationError("xi", "must be >= 0");
    const double nats = 0.5 * std::log1p(xi);
    return unit == RateUnit::Bits ? nats / std::numbers::ln2 : nats;
}

SubsetRates subset_rates(Subset s, const PowerAllocation& power, const StandardChannel& ch) {
    check_subset(s, ch.users());
    power.validate_against(ch);
    const SubsetSums sums = sums_for(s, power, ch);
    const RateUnit u = ch.rate_unit;
    return SubsetRates{
        g(sums.power_in, u),
        g(sums.eve_in, u),
        g(sums.power_in / (1.0 + sums.power_out), u),
        g(sums.eve_in / (1.0 + sums.eve_out), u),
    };
}

double phi(Subset s, const PowerAllocation& power, const StandardChannel& ch) {
    check_subset(s, ch.users());
    power.validate_against(ch);
    const SubsetSums sums = sums_for(s, power, ch);
    return sums.power_in - sums.eve_in / (1.0 + sums.eve_out);
}

Feasibility is_feasible(const PowerAllocation& power, const StandardChannel& ch) {
    power.validate_against(ch);
    for (std::size_t k = 0; k < ch.users(); ++k) {
        if (power.p[k] > ch.p_max[k]) {
            return {false, Violation{Violation::Kind::PowerBound, k, 0, power.p[k]}};
        }
    }
    const Subset all = full_set(ch.users());
    for (Subset s = 1; s <= all; ++s) {
        const double value = phi(s, power, ch);
        if (value < -kFeasibilityTol) return {false, Violation{Violation::Kind::Subset, 0, s, value}};
    }
    return {true, std::nullopt};
}

const char* to_string(RegionShape shape) {
    switch (shape) {
        case RegionShape::Empty: return "empty";
        case RegionShape::Point: return "point";
        case RegionShape::Segment: return "segment";
        case RegionShape::Rectangle: return "rectangle";
        case RegionShape::Triangle: return "triangle";
        case RegionShape::Quadrilateral: return "quadrilateral";
        case RegionShape::Pentagon: return "pentagon";
        case RegionShape::NotComputed: return "not_computed";
    }
    return "unknown";
}

std::size_t RateRegion::users() const noexcept {
    return static_cast<std::size_t>(std::bit_width(halfspaces.size()));
}

Polygon two_user_polygon(double b1_raw, double b2_raw, double b12_raw) {
    const auto b1c = clamp_bound(b1_raw);
    const auto b2c = clamp_bound(b2_raw);
    const auto b12c = clamp_bound(b12_raw);
    if (!b1c || !b2c || !b12c) return {RegionShape::Empty, {}};
    const double b1 = *b1c, b2 = *b2c, b12 = *b12c;

    std::vector<RateVector> v;
    push_unique(v, {0.0, 0.0});
    push_unique(v, {std::min(b1, b12), 0.0});
    if (b12 > b1) push_unique(v, {b1, std::min(b2, b12 - b1)});
    if (b12 > b2) push_unique(v, {std::min(b1, b12 - b2), b2});
    push_unique(v, {0.0, std::min(b2, b12)});

    Polygon out;
    out.vertices = std::move(v);
    if (out.vertices.size() == 1) {
        out.shape = RegionShape::Point;
    } else if (out.vertices.size() == 2) {
        out.shape = RegionShape::Segment;
    } else if (b12 >= b1 + b2) {
        out.shape = RegionShape::Rectangle;
    } else if (b12 <= std::min(b1, b2)) {
        out.shape = RegionShape::Triangle;
    } else if (b12 > std::max(b1, b2)) {
        out.shape = RegionShape::Pentagon;
    } else {
        out.shape = RegionShape::Quadrilateral;
    }
    return out;
}

RateRegion build_region(const PowerAllocation& power, const StandardChannel& ch) {
    power.validate_against(ch);
    RateRegion region;
    region.feasible = is_feasible(power, ch).feasible;

    const Subset all = full_set(ch.users());
    region.halfspaces.reserve(all);
    for (Subset s = 1; s <= all; ++s) {
        const SubsetRates r = subset_rates(s, power, ch);
        region.halfspaces.push_back({s, r.cm - r.cw_tilde});
    }

    if (ch.users() == 1) {
        std::vector<RateVector> v;
        if (const auto b = clamp_bound(region.halfspaces[0].bound)) {
            push_unique(v, {0.0});
            push_unique(v, {*b});
        }
        region.shape = v.empty() ? RegionShape::Empty
                       : v.size() == 1 ? RegionShape::Point
                                       : RegionShape::Segment;
        region.vertices = std::move(v);
    } else if (ch.users() == 2) {
        Polygon poly = two_user_polygon(region.bound(0b01), region.bound(0b10), region.bound(0b11));
        region.shape = poly.shape;
        region.vertices = std::move(poly.vertices);
    }
    return region;
}

bool contains(const RateRegion& region, const RateVector& rates) {
    if (rates.size() != region.users())
        throw ValidationError("rates", "length must match the region's user count");
    for (double r : rates)
        if (!(r >= 0.0)) return false;
    for (const Halfspace& hs : region.halfspaces) {
        double total = 0.0;
        for (std::size_t k : members(hs.subset)) total += rates[k];
        if (total > hs.bound + kContainsTol) return false;
    }
    return true;
}

std::vector<SweepEntry> union_sweep(const StandardChannel& ch, int grid_steps) {
    ch.validate();
    if (ch.users() != 2) throw ValidationError("users", "region sweep requires exactly 2 users");
    if (grid_steps < 2) throw ValidationError("grid_steps", "must be >= 2");

    std::vector<SweepEntry> out;
    for (double p1 : axis_points(ch.p_max[0], grid_steps)) {
        for (double p2 : axis_points(ch.p_max[1], grid_steps)) {
            PowerAllocation power{{p1, p2}};
            if (!is_feasible(power, ch)) continue;
            RateRegion region = build_region(power, ch);
            out.push_back({std::move(power), std::move(region)});
        }
    }
    return out;
}

}  // namespace ggmacwt
