#include "wxcompress/scene.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <map>
#include <ostream>

#include "wxcompress/csv.hpp"
#include "wxcompress/errors.hpp"

namespace wxc {

const char* to_string(WeatherQuantity q) {
    switch (q) {
        case WeatherQuantity::Temperature: return "temperature";
        case WeatherQuantity::FlightCategory: return "flight-category";
        case WeatherQuantity::VisibilityReduction: return "visibility-reduction";
    }
    return "?";
}

std::optional<WeatherQuantity> weather_quantity_from_string(const std::string& s) {
    if (s == "temperature") return WeatherQuantity::Temperature;
    if (s == "flight-category") return WeatherQuantity::FlightCategory;
    if (s == "visibility-reduction") return WeatherQuantity::VisibilityReduction;
    return std::nullopt;
}

namespace {

void append_le(std::vector<std::uint8_t>& out, const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    out.insert(out.end(), b, b + n);
}

}  // namespace

std::vector<std::uint8_t> encode_site_list(const std::vector<Site>& sites) {
    std::vector<std::uint8_t> bytes;
    for (const auto& s : sites) {
        const std::uint16_t len = static_cast<std::uint16_t>(s.station_id.size());
        append_le(bytes, &len, 2);
        append_le(bytes, s.station_id.data(), s.station_id.size());
        append_le(bytes, &s.latitude, 8);
        append_le(bytes, &s.longitude, 8);
    }
    return bytes;
}

Fingerprint fingerprint_sites(const std::vector<Site>& sites) {
    return sha256(encode_site_list(sites));
}

std::pair<SiteIndex, SceneVector> build_scene(const std::vector<StationObservation>& observations,
                                              WeatherQuantity quantity) {
    // Latest in-window observation per station; timestamp ties go to the
    // later input position.
    std::map<std::string, const StationObservation*> latest;
    for (const auto& o : observations) {
        auto it = latest.find(o.station_id);
        if (it == latest.end() || o.observation_time >= it->second->observation_time)
            latest[o.station_id] = &o;
    }

    SiteIndex index;
    std::vector<double> values;
    for (const auto& [id, obs] : latest) {  // std::map iterates id-ascending
        double v = 0.0;
        switch (quantity) {
            case WeatherQuantity::Temperature:
                if (!obs->temperature_c) continue;
                v = *obs->temperature_c;
                break;
            case WeatherQuantity::FlightCategory:
                if (!obs->flight_category) continue;
                v = (*obs->flight_category == FlightCategory::VFR) ? 0.0 : 1.0;
                break;
            case WeatherQuantity::VisibilityReduction:
                if (!obs->visibility_mi) continue;
                v = 10.0 - std::min(*obs->visibility_mi, 10.0);
                break;
        }
        index.sites.push_back({id, obs->latitude, obs->longitude});
        values.push_back(v);
    }
    if (index.sites.empty())
        throw EmptySceneError(std::string("build_scene: no station carries ") + to_string(quantity));

    index.fingerprint = fingerprint_sites(index.sites);

    SceneVector scene;
    scene.quantity = quantity;
    scene.site_fingerprint = index.fingerprint;
    scene.values = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<long>(values.size()));
    return {std::move(index), std::move(scene)};
}

void write_scene_csv(std::ostream& out, const SiteIndex& sites, const SceneVector& scene) {
    if (scene.values.size() != static_cast<long>(sites.size()))
        throw ArgumentError("write_scene_csv: site/value length mismatch");
    out << "station_id,latitude,longitude,value\n";
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const auto& s = sites.sites[i];
        out << csv_escape(s.station_id) << ',' << fmt_double(s.latitude) << ','
            << fmt_double(s.longitude) << ',' << fmt_double(scene.values(static_cast<long>(i)))
            << '\n';
    }
}

std::pair<SiteIndex, SceneVector> read_scene_csv(std::istream& in, WeatherQuantity quantity) {
    CsvReader reader(in);
    auto header = reader.next();
    if (!header || header->size() < 4 || (*header)[0] != "station_id" ||
        (*header)[1] != "latitude" || (*header)[2] != "longitude" || (*header)[3] != "value")
        throw FormatError("scene CSV: expected header station_id,latitude,longitude,value");

    SiteIndex index;
    std::vector<double> values;
    while (auto rec = reader.next()) {
        const auto& r = *rec;
        if (r.size() < 4)
            throw FormatError("scene CSV: short row at line " + std::to_string(reader.line_number()));
        try {
            index.sites.push_back({r[0], std::stod(r[1]), std::stod(r[2])});
            values.push_back(std::stod(r[3]));
        } catch (const std::exception&) {
            throw FormatError("scene CSV: unparseable row at line " +
                              std::to_string(reader.line_number()));
        }
    }
    if (index.sites.empty()) throw EmptySceneError("scene CSV: no data rows");
    index.fingerprint = fingerprint_sites(index.sites);

    SceneVector scene;
    scene.quantity = quantity;
    scene.site_fingerprint = index.fingerprint;
    scene.values = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<long>(values.size()));
    return {std::move(index), std::move(scene)};
}

}  // namespace wxc
