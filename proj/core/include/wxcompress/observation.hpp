#ifndef WXCOMPRESS_OBSERVATION_HPP
#define WXCOMPRESS_OBSERVATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wxcompress/timeutil.hpp"

namespace wxc {

// VFR is the best category; severity increases down the list.
enum class FlightCategory { VFR = 0, MVFR = 1, IFR = 2, LIFR = 3 };

const char* to_string(FlightCategory c);
std::optional<FlightCategory> flight_category_from_string(const std::string& s);

struct StationObservation {
    std::string station_id;
    double latitude = 0.0;
    double longitude = 0.0;
    UnixTime observation_time = 0;
    std::optional<double> temperature_c;
    std::optional<double> visibility_mi;
    std::optional<double> ceiling_ft;
    std::optional<FlightCategory> flight_category;
};

// station_id -> (latitude, longitude)
using StationTable = std::map<std::string, std::pair<double, double>>;

struct IngestReport {
    std::size_t accepted_count = 0;
    std::size_t skipped_count = 0;
    // (1-based line/row number, reason)
    std::vector<std::pair<std::size_t, std::string>> skip_reasons;
};

struct BoundingBox {
    double south = 25.1;
    double north = 45.4;
    double west = -124.8;
    double east = -66.9;
};

// Half-open window [start, end).
struct TimeWindow {
    UnixTime start = 0;
    UnixTime end = 0;
};

// Worse of the ceiling-implied and visibility-implied classes:
// LIFR if ceiling < 500 ft or vis < 1 mi; IFR if < 1000 ft or < 3 mi;
// MVFR if <= 3000 ft or <= 5 mi; VFR otherwise.  An absent input
// constrains nothing; both absent yields nullopt.
std::optional<FlightCategory> derive_flight_category(std::optional<double> ceiling_ft,
                                                     std::optional<double> visibility_mi);

// Keeps observations inside the box (inclusive) and the half-open window,
// preserving input order.
std::vector<StationObservation> filter_observations(const std::vector<StationObservation>& obs,
                                                    const BoundingBox& box,
                                                    const TimeWindow& window);

}  // namespace wxc

#endif
