#ifndef WXCOMPRESS_AWC_CSV_HPP
#define WXCOMPRESS_AWC_CSV_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "wxcompress/observation.hpp"

namespace wxc {

// Column-name mapping for AWC-style observation CSV.  station_id,
// observation_time, latitude and longitude are mandatory; the rest are
// used when the header carries them.  When no direct ceiling column is
// present, the ceiling is derived from the lowest BKN/OVC/OVX sky layer.
struct AwcColumnConfig {
    std::string station_id = "station_id";
    std::string observation_time = "observation_time";
    std::string latitude = "latitude";
    std::string longitude = "longitude";
    std::string temp_c = "temp_c";
    std::string visibility = "visibility_statute_mi";
    std::string flight_category = "flight_category";
    std::string ceiling = "ceiling_ft";
    std::array<std::string, 4> sky_cover = {"sky_cover_1", "sky_cover_2", "sky_cover_3",
                                            "sky_cover_4"};
    std::array<std::string, 4> sky_base = {"cloud_base_ft_agl_1", "cloud_base_ft_agl_2",
                                           "cloud_base_ft_agl_3", "cloud_base_ft_agl_4"};
};

// One observation per well-formed data row; malformed rows are skipped
// and logged in the report, never fatal.  Throws FormatError if the
// header lacks a mandatory column, IoError if the stream is bad.
std::pair<std::vector<StationObservation>, IngestReport>
parse_awc_csv(std::istream& in, const AwcColumnConfig& cols = {});

// Canonical observation CSV (the pipeline's intermediate file): columns
// station_id,observation_time,latitude,longitude,temp_c,
// visibility_statute_mi,ceiling_ft,flight_category.
void write_observation_csv(std::ostream& out, const std::vector<StationObservation>& obs);

}  // namespace wxc

#endif
