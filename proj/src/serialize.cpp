#include "ggmacwt/serialize.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ggmacwt {

namespace {

double number_at(const Json& obj, const char* key, const std::string& path) {
    const std::string field = path.empty() ? key : path + "." + key;
    if (!obj.contains(key)) throw ValidationError(field, "is required");
    const Json& v = obj.at(key);
    if (!v.is_number()) throw ValidationError(field, "must be a number");
    return v.get<double>();
}

std::vector<double> number_array(const Json& doc, const char* key) {
    if (!doc.contains(key)) throw ValidationError(key, "is required");
    const Json& arr = doc.at(key);
    if (!arr.is_array()) throw ValidationError(key, "must be an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number())
            throw ValidationError(std::string(key) + "[" + std::to_string(i) + "]", "must be a number");
        out.push_back(arr[i].get<double>());
    }
    return out;
}

RateUnit unit_of(const Json& doc) {
    if (!doc.contains("rate_unit")) return RateUnit::Bits;
    const Json& v = doc.at("rate_unit");
    if (!v.is_string()) throw ValidationError("rate_unit", "must be a string");
    return rate_unit_from_string(v.get<std::string>());
}

Json labels(const std::vector<std::size_t>& indices) {
    Json out = Json::array();
    for (std::size_t k : indices) out.push_back(k + 1);
    return out;
}

template <std::size_t N>
void write_row(std::ostream& os, const std::array<double, N>& values) {
    for (std::size_t i = 0; i < N; ++i) {
        if (i) os << ',';
        os << format_double(values[i]);
    }
    os << '\n';
}

}  // namespace

LoadedChannel parse_channel(const Json& doc) {
    if (!doc.is_object()) throw ValidationError("channel", "document must be a JSON object");
    LoadedChannel out;
    const bool standard = doc.contains("standard") && doc.at("standard").is_boolean() &&
                          doc.at("standard").get<bool>();
    if (standard) {
        out.standard = make_standard(number_array(doc, "h"), number_array(doc, "p_max"), unit_of(doc));
        return out;
    }

    if (!doc.contains("users") || !doc.at("users").is_array())
        throw ValidationError("users", "must be an array of user objects");
    ChannelParams raw;
    const Json& users = doc.at("users");
    for (std::size_t k = 0; k < users.size(); ++k) {
        const std::string path = "users[" + std::to_string(k) + "]";
        if (!users[k].is_object()) throw ValidationError(path, "must be an object");
        raw.gains_to_receiver.push_back(number_at(users[k], "gain_receiver", path));
        raw.gains_to_eavesdropper.push_back(number_at(users[k], "gain_eavesdropper", path));
        raw.power_limits.push_back(number_at(users[k], "power_max", path));
    }
    raw.noise_var_receiver = number_at(doc, "noise_var_receiver", "");
    raw.noise_var_eavesdropper = number_at(doc, "noise_var_eavesdropper", "");
    raw.rate_unit = unit_of(doc);
    out.standard = standardize(raw);
    out.raw = std::move(raw);
    return out;
}

LoadedChannel load_channel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("input", "cannot open \"" + path + "\"");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("input", std::string("invalid JSON: ") + e.what());
    }
    return parse_channel(doc);
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

Json subset_labels(Subset s) { return labels(members(s)); }

Json to_json(const StandardChannel& ch) {
    Json out;
    out["standard"] = true;
    out["h"] = ch.h;
    out["p_max"] = ch.p_max;
    out["rate_unit"] = to_string(ch.rate_unit);
    return out;
}

Json to_json(const Feasibility& result, RateUnit unit) {
    Json out;
    out["feasible"] = result.feasible;
    if (result.witness) {
        const Violation& w = *result.witness;
        Json witness;
        if (w.kind == Violation::Kind::PowerBound) {
            witness["kind"] = "power_bound";
            witness["user"] = w.user + 1;
            witness["power"] = w.value;
        } else {
            witness["kind"] = "subset";
            witness["subset"] = subset_labels(w.subset);
            witness["phi"] = w.value;
        }
        out["witness"] = std::move(witness);
    } else {
        out["witness"] = nullptr;
    }
    out["rate_unit"] = to_string(unit);
    return out;
}

Json to_json(const RateRegion& region, RateUnit unit) {
    Json out;
    out["feasible"] = region.feasible;
    out["shape"] = to_string(region.shape);
    Json halfspaces = Json::array();
    for (const Halfspace& hs : region.halfspaces)
        halfspaces.push_back(Json{{"subset", subset_labels(hs.subset)}, {"bound", hs.bound}});
    out["halfspaces"] = std::move(halfspaces);
    if (region.vertices) {
        out["vertices"] = *region.vertices;
    } else {
        out["vertices"] = nullptr;
    }
    out["rate_unit"] = to_string(unit);
    return out;
}

Json to_json(const SumRateSolution& sol) {
    Json out;
    out["p_star"] = sol.p_star.p;
    out["limiting_user"] = labels(sol.transmitting);
    out["limiting_index"] = sol.limiting_user;
    out["sum_rate"] = sol.sum_rate;
    out["rho_star"] = sol.rho_star;
    out["rate_unit"] = to_string(sol.rate_unit);
    return out;
}

Json to_json(const JammingSolution& sol) {
    Json out;
    const auto powers = sol.original_powers();
    out["powers"] = {powers[0], powers[1]};
    out["p1"] = sol.p1;
    out["p2"] = sol.p2;
    out["permutation"] = {sol.permutation[0] + 1, sol.permutation[1] + 1};
    out["secrecy_rate"] = sol.secrecy_rate;
    out["branch"] = to_string(sol.branch);
    out["case"] = to_string(sol.case_tag);
    out["rate_unit"] = to_string(sol.rate_unit);
    return out;
}

void write_vertices_csv(std::ostream& os, const RateRegion& region) {
    if (region.users() != 2) throw ValidationError("users", "vertex CSV requires exactly 2 users");
    os << "R1,R2\n";
    if (!region.vertices) return;
    for (const RateVector& v : *region.vertices) write_row<2>(os, {v[0], v[1]});
}

void write_region_sweep_csv(std::ostream& os, const std::vector<SweepEntry>& sweep) {
    os << "P1,P2,b1,b2,b12\n";
    for (const SweepEntry& e : sweep) {
        write_row<5>(os, {e.power.p[0], e.power.p[1], e.region.bound(0b01), e.region.bound(0b10),
                          e.region.bound(0b11)});
    }
}

void write_jam_sweep_csv(std::ostream& os, const std::vector<JamSweepRow>& rows) {
    os << "p2,objective\n";
    for (const JamSweepRow& r : rows) write_row<2>(os, {r.p2, r.objective});
}

}  // namespace ggmacwt
