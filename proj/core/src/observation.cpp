#include "wxcompress/observation.hpp"

#include <algorithm>
#include <cctype>

#include "wxcompress/errors.hpp"

namespace wxc {

const char* to_string(FlightCategory c) {
    switch (c) {
        case FlightCategory::VFR: return "VFR";
        case FlightCategory::MVFR: return "MVFR";
        case FlightCategory::IFR: return "IFR";
        case FlightCategory::LIFR: return "LIFR";
    }
    return "?";
}

std::optional<FlightCategory> flight_category_from_string(const std::string& s) {
    std::string u;
    u.reserve(s.size());
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "VFR") return FlightCategory::VFR;
    if (u == "MVFR") return FlightCategory::MVFR;
    if (u == "IFR") return FlightCategory::IFR;
    if (u == "LIFR") return FlightCategory::LIFR;
    return std::nullopt;
}

std::optional<FlightCategory> derive_flight_category(std::optional<double> ceiling_ft,
                                                     std::optional<double> visibility_mi) {
    if (ceiling_ft && *ceiling_ft < 0) throw ArgumentError("derive_flight_category: negative ceiling");
    if (visibility_mi && *visibility_mi < 0) throw ArgumentError("derive_flight_category: negative visibility");
    if (!ceiling_ft && !visibility_mi) return std::nullopt;

    auto from_ceiling = [](double c) {
        if (c < 500) return FlightCategory::LIFR;
        if (c < 1000) return FlightCategory::IFR;
        if (c <= 3000) return FlightCategory::MVFR;
        return FlightCategory::VFR;
    };
    auto from_visibility = [](double v) {
        if (v < 1) return FlightCategory::LIFR;
        if (v < 3) return FlightCategory::IFR;
        if (v <= 5) return FlightCategory::MVFR;
        return FlightCategory::VFR;
    };

    FlightCategory worst = FlightCategory::VFR;
    if (ceiling_ft) worst = std::max(worst, from_ceiling(*ceiling_ft));
    if (visibility_mi) worst = std::max(worst, from_visibility(*visibility_mi));
    return worst;
}

std::vector<StationObservation> filter_observations(const std::vector<StationObservation>& obs,
                                                    const BoundingBox& box,
                                                    const TimeWindow& window) {
    if (box.south > box.north) throw ArgumentError("filter_observations: bounding box has south > north");
    if (box.west > box.east) throw ArgumentError("filter_observations: bounding box has west > east");
    if (window.start >= window.end) throw ArgumentError("filter_observations: time window has start >= end");

    std::vector<StationObservation> out;
    for (const auto& o : obs) {
        if (o.latitude < box.south || o.latitude > box.north) continue;
        if (o.longitude < box.west || o.longitude > box.east) continue;
        if (o.observation_time < window.start || o.observation_time >= window.end) continue;
        out.push_back(o);
    }
    return out;
}

}  // namespace wxc
