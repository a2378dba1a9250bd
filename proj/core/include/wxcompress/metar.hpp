#ifndef WXCOMPRESS_METAR_HPP
#define WXCOMPRESS_METAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "wxcompress/observation.hpp"

namespace wxc {

// Decoded surface report before coordinates are attached.  The report's
// time group is day-of-month plus time (DDHHMMZ); it is resolved against
// a reference year/month in join_locations.
struct PartialObservation {
    std::string station_id;
    std::optional<int> day_of_month;
    std::optional<int> hour;
    std::optional<int> minute;
    std::optional<double> temperature_c;
    std::optional<double> visibility_mi;
    std::optional<double> ceiling_ft;
};

// Decodes one METAR line.  The first token is the station id (a leading
// "METAR"/"SPECI" keyword is skipped).  Temperature comes from the TT/TD
// group ("12/08", "M05/M07"), visibility from the "...SM" group including
// fraction and whole+fraction forms, the ceiling from the lowest BKN/OVC/VV
// layer height x100 ft.  Unrecognized tokens are ignored; undecodable
// fields stay absent.  Throws ParseError on an empty line or missing
// station id.
PartialObservation parse_metar_text(const std::string& line);

// Reference month used to resolve DDHHMMZ time groups.
struct ReferenceMonth {
    int year = 1970;
    int month = 1;
};

// Attaches coordinates from the station table and resolves observation
// times.  Unresolved stations (or reports with no time group) are skipped
// with a reason; skips are reported, never fatal.
std::pair<std::vector<StationObservation>, IngestReport>
join_locations(const std::vector<PartialObservation>& partials,
               const StationTable& table,
               const ReferenceMonth& ref);

// Station table CSV: header station_id,latitude,longitude.
StationTable load_station_table(std::istream& in);

}  // namespace wxc

#endif
