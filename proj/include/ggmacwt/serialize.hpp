// JSON and CSV documents exchanged with the command line tool. User indices
// in documents are 1-based labels; the library uses 0-based indices.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ggmacwt/channel.hpp"
#include "ggmacwt/collaborative.hpp"
#include "ggmacwt/oracle.hpp"
#include "ggmacwt/power_opt.hpp"
#include "ggmacwt/region.hpp"

namespace ggmacwt {

using Json = nlohmann::ordered_json;

struct LoadedChannel {
    std::optional<ChannelParams> raw;  ///< absent for `standard: true` documents
    StandardChannel standard;
};

/// Accepts either a raw description
///   {"users": [{"gain_receiver", "gain_eavesdropper", "power_max"}...],
///    "noise_var_receiver", "noise_var_eavesdropper", "rate_unit"?}
/// or {"standard": true, "h": [...], "p_max": [...], "rate_unit"?}.
LoadedChannel parse_channel(const Json& doc);
LoadedChannel load_channel_file(const std::string& path);

/// Shortest decimal string that reads back to the same double; locale-free.
std::string format_double(double value);

Json subset_labels(Subset s);

Json to_json(const StandardChannel& ch);
Json to_json(const Feasibility& result, RateUnit unit);
Json to_json(const RateRegion& region, RateUnit unit);
Json to_json(const SumRateSolution& sol);
Json to_json(const JammingSolution& sol);

void write_vertices_csv(std::ostream& os, const RateRegion& region);
void write_region_sweep_csv(std::ostream& os, const std::vector<SweepEntry>& sweep);
void write_jam_sweep_csv(std::ostream& os, const std::vector<JamSweepRow>& rows);

}  // namespace ggmacwt
