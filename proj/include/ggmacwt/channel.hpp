// Channel descriptions for the Gaussian multiple-access wire-tap channel and
// the scaling that brings an arbitrary channel into standard form.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ggmacwt {

/// Largest user count accepted anywhere. Feasibility checks enumerate
/// every nonempty user subset, so this caps the work at 2^16 - 1 subsets.
inline constexpr std::size_t kMaxUsers = 16;

enum class RateUnit { Bits, Nats };

const char* to_string(RateUnit unit);
RateUnit rate_unit_from_string(const std::string& name);

/// Raised when user-supplied data breaks a documented constraint. The
/// offending field is kept separately so the CLI can report it.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& constraint);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A channel as physically described: per-user linear power gains towards
/// the intended receiver and the eavesdropper, the two noise variances and
/// raw transmit power limits.
struct ChannelParams {
    std::vector<double> gains_to_receiver;
    std::vector<double> gains_to_eavesdropper;
    double noise_var_receiver = 1.0;
    double noise_var_eavesdropper = 1.0;
    std::vector<double> power_limits;
    RateUnit rate_unit = RateUnit::Bits;

    std::size_t users() const noexcept { return gains_to_receiver.size(); }
    void validate() const;
};

/// Standard form: unit receiver gains and unit noise at both terminals.
/// The eavesdropper is described by h alone.
struct StandardChannel {
    std::vector<double> h;
    std::vector<double> p_max;
    RateUnit rate_unit = RateUnit::Bits;

    std::size_t users() const noexcept { return h.size(); }
    void validate() const;
};

StandardChannel make_standard(std::vector<double> h, std::vector<double> p_max,
                              RateUnit unit = RateUnit::Bits);

/// Codewords are scaled by sqrt(h^M_k / var_M), so power limits pick up the
/// factor h^M_k / var_M and the eavesdropper gain becomes
/// h^W_k var_M / (h^M_k var_W). Every receiver and eavesdropper SNR is kept.
StandardChannel standardize(const ChannelParams& raw);

struct SortedChannel {
    StandardChannel channel;
    /// permutation[i] is the original index of the i-th user in sorted order.
    std::vector<std::size_t> permutation;
};

/// Stable sort of users by non-decreasing h.
SortedChannel sort_by_gain(const StandardChannel& ch);

/// Undo a sort_by_gain permutation on a per-user vector.
std::vector<double> unpermute(const std::vector<double>& sorted_values,
                              const std::vector<std::size_t>& permutation);

}  // namespace ggmacwt
