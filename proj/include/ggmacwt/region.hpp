// Rate quantities, the allowable power set and the achievable secrecy rate
// region at a fixed power allocation.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ggmacwt/channel.hpp"

namespace ggmacwt {

/// Bitmask over user indices 0..K-1; bit k set means user k is in the subset.
using Subset = std::uint32_t;

inline constexpr Subset full_set(std::size_t users) {
    return static_cast<Subset>((Subset{1} << users) - 1u);
}

/// Member indices of a subset in ascending order.
std::vector<std::size_t> members(Subset s);

/// Transmit powers in standardized units, one per user.
struct PowerAllocation {
    std::vector<double> p;

    std::size_t users() const noexcept { return p.size(); }
    /// Throws ValidationError unless p matches the channel and is >= 0.
    void validate_against(const StandardChannel& ch) const;
};

/// Tolerance on phi_S when deciding membership of the allowable power set;
/// optimizers return points sitting exactly on its boundary.
inline constexpr double kFeasibilityTol = 1e-12;

/// Half the logarithm of 1 + xi in the requested base.
double g(double xi, RateUnit unit = RateUnit::Bits);

struct SubsetRates {
    double cm = 0.0;        ///< g(sum_S P)
    double cw = 0.0;        ///< g(sum_S h P)
    double cm_tilde = 0.0;  ///< g(sum_S P / (1 + sum_Sc P))
    double cw_tilde = 0.0;  ///< g(sum_S h P / (1 + sum_Sc h P))
};

SubsetRates subset_rates(Subset s, const PowerAllocation& power, const StandardChannel& ch);

/// phi_S(P) = sum_S P - sum_S h P / (1 + sum_Sc h P). Its sign matches the
/// sign of C^M_S - C~^W_S.
double phi(Subset s, const PowerAllocation& power, const StandardChannel& ch);

struct Violation {
    enum class Kind { PowerBound, Subset };
    Kind kind = Kind::Subset;
    std::size_t user = 0;  ///< offending user for PowerBound
    Subset subset = 0;     ///< offending subset for Subset
    double value = 0.0;    ///< the offending power, or phi_S
};

struct Feasibility {
    bool feasible = true;
    std::optional<Violation> witness;

    explicit operator bool() const noexcept { return feasible; }
};

/// Box bounds are checked first (ascending user), then phi_S >= -tol for
/// every nonempty subset in ascending mask order. The first violation found
/// is returned as witness.
Feasibility is_feasible(const PowerAllocation& power, const StandardChannel& ch);

struct Halfspace {
    Subset subset = 0;
    double bound = 0.0;  ///< C^M_S - C~^W_S
};

enum class RegionShape {
    Empty,
    Point,
    Segment,
    Rectangle,      ///< sum constraint inactive
    Triangle,       ///< sum constraint dominates both single-user bounds
    Quadrilateral,  ///< sum constraint cuts one single-user bound only
    Pentagon,
    NotComputed,    ///< K >= 3, only the halfspaces are available
};

const char* to_string(RegionShape shape);

using RateVector = std::vector<double>;

struct RateRegion {
    std::vector<Halfspace> halfspaces;  ///< one per nonempty subset, ascending mask
    std::optional<std::vector<RateVector>> vertices;
    RegionShape shape = RegionShape::NotComputed;
    bool feasible = false;

    std::size_t users() const noexcept;
    double bound(Subset s) const { return halfspaces.at(s - 1).bound; }
};

struct Polygon {
    RegionShape shape = RegionShape::Empty;
    std::vector<RateVector> vertices;  ///< counter-clockwise from the origin
};

/// Vertices of {R >= 0, R1 <= b1, R2 <= b2, R1 + R2 <= b12}.
Polygon two_user_polygon(double b1, double b2, double b12);

RateRegion build_region(const PowerAllocation& power, const StandardChannel& ch);

/// True iff R >= 0 and sum_S R <= b_S + 1e-12 for every subset S.
bool contains(const RateRegion& region, const RateVector& rates);

struct SweepEntry {
    PowerAllocation power;
    RateRegion region;
};

/// Regions at every feasible point of the grid {0, d, ..., P_k,max}^2 with
/// d = P_k,max / (grid_steps - 1), in ascending (P1, P2) order. Collapsed
/// axes (P_k,max = 0) contribute a single point. Two-user channels only.
std::vector<SweepEntry> union_sweep(const StandardChannel& ch, int grid_steps);

}  // namespace ggmacwt
