#include "ggmacwt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ggmacwt {

namespace {

std::string indexed(const char* array, std::size_t k, const char* member) {
    return std::string(array) + "[" + std::to_string(k) + "]." + member;
}

void check_user_count(std::size_t n) {
    if (n == 0) throw ValidationError("users", "at least one user is required");
    if (n > kMaxUsers)
        throw ValidationError("users", "at most " + std::to_string(kMaxUsers) + " users are supported");
}

void check_nonneg(double v, const std::string& field) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError(field, "must be finite and >= 0");
}

void check_positive(double v, const std::string& field) {
    if (!std::isfinite(v) || v <= 0.0) throw ValidationError(field, "must be finite and > 0");
}

}  // namespace

const char* to_string(RateUnit unit) {
    return unit == RateUnit::Bits ? "bits" : "nats";
}

RateUnit rate_unit_from_string(const std::string& name) {
    if (name == "bits") return RateUnit::Bits;
    if (name == "nats") return RateUnit::Nats;
    throw ValidationError("rate_unit", "must be \"bits\" or \"nats\", got \"" + name + "\"");
}

ValidationError::ValidationError(std::string field, const std::string& constraint)
    : std::invalid_argument(field + ": " + constraint), field_(std::move(field)) {}

void ChannelParams::validate() const {
    const std::size_t k_users = users();
    check_user_count(k_users);
    if (gains_to_eavesdropper.size() != k_users || power_limits.size() != k_users)
        throw ValidationError("users", "gain and power vectors must all have the same length");
    for (std::size_t k = 0; k < k_users; ++k) {
        check_positive(gains_to_receiver[k], indexed("users", k, "gain_receiver"));
        check_nonneg(gains_to_eavesdropper[k], indexed("users", k, "gain_eavesdropper"));
        check_nonneg(power_limits[k], indexed("users", k, "power_max"));
    }
    check_positive(noise_var_receiver, "noise_var_receiver");
    check_positive(noise_var_eavesdropper, "noise_var_eavesdropper");
}

void StandardChannel::validate() const {
    check_user_count(h.size());
    if (p_max.size() != h.size()) throw ValidationError("p_max", "length must match h");
    for (std::size_t k = 0; k < h.size(); ++k) {
        check_nonneg(h[k], "h[" + std::to_string(k) + "]");
        check_nonneg(p_max[k], "p_max[" + std::to_string(k) + "]");
    }
}

StandardChannel make_standard(std::vector<double> h, std::vector<double> p_max, RateUnit unit) {
    StandardChannel ch{std::move(h), std::move(p_max), unit};
    ch.validate();
    return ch;
}

StandardChannel standardize(const ChannelParams& raw) {
    raw.validate();
    StandardChannel out;
    out.rate_unit = raw.rate_unit;
    out.h.resize(raw.users());
    out.p_max.resize(raw.users());
    for (std::size_t k = 0; k < raw.users(); ++k) {
        out.h[k] = raw.gains_to_eavesdropper[k] * raw.noise_var_receiver /
                   (raw.gains_to_receiver[k] * raw.noise_var_eavesdropper);
        out.p_max[k] = raw.gains_to_receiver[k] * raw.power_limits[k] / raw.noise_var_receiver;
    }
    return out;
}

SortedChannel sort_by_gain(const StandardChannel& ch) {
    SortedChannel out;
    out.permutation.resize(ch.users());
    std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
    std::stable_sort(out.permutation.begin(), out.permutation.end(),
                     [&](std::size_t a, std::size_t b) { return ch.h[a] < ch.h[b]; });
    out.channel.rate_unit = ch.rate_unit;
    for (std::size_t idx : out.permutation) {
        out.channel.h.push_back(ch.h[idx]);
        out.channel.p_max.push_back(ch.p_max[idx]);
    }
    return out;
}

std::vector<double> unpermute(const std::vector<double>& sorted_values,
                              const std::vector<std::size_t>& permutation) {
    std::vector<double> out(sorted_values.size());
    for (std::size_t i = 0; i < permutation.size(); ++i) out[permutation[i]] = sorted_values[i];
    return out;
}

}  // namespace ggmacwt
