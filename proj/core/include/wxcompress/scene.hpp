#ifndef WXCOMPRESS_SCENE_HPP
#define WXCOMPRESS_SCENE_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "wxcompress/fingerprint.hpp"
#include "wxcompress/observation.hpp"

namespace wxc {

enum class WeatherQuantity { Temperature, FlightCategory, VisibilityReduction };

const char* to_string(WeatherQuantity q);
std::optional<WeatherQuantity> weather_quantity_from_string(const std::string& s);

struct Site {
    std::string station_id;
    double latitude;
    double longitude;
};

// Ordered site list; the order is the vertex order for every downstream
// matrix.  The fingerprint binds scenes and bases built from the same
// sites together.
struct SiteIndex {
    std::vector<Site> sites;
    Fingerprint fingerprint{};

    std::size_t size() const { return sites.size(); }
};

// Canonical byte encoding hashed into the fingerprint; also the on-disk
// site-table layout (little-endian u16 id length, id bytes, f64 lat/lon).
std::vector<std::uint8_t> encode_site_list(const std::vector<Site>& sites);
Fingerprint fingerprint_sites(const std::vector<Site>& sites);

struct SceneVector {
    WeatherQuantity quantity = WeatherQuantity::Temperature;
    Fingerprint site_fingerprint{};
    Eigen::VectorXd values;
};

// One value per station from its latest in-window observation, stations
// sorted by id.  Stations lacking the field(s) the quantity needs are
// dropped.  Mappings: Temperature -> temp_c; FlightCategory -> 0 for VFR,
// 1 otherwise; VisibilityReduction -> 10 - min(visibility, 10).
// Throws EmptySceneError when no station survives.
std::pair<SiteIndex, SceneVector> build_scene(const std::vector<StationObservation>& observations,
                                              WeatherQuantity quantity);

// Scene CSV: header station_id,latitude,longitude,value, rows in
// SiteIndex order, doubles at 17 significant digits.
void write_scene_csv(std::ostream& out, const SiteIndex& sites, const SceneVector& scene);
std::pair<SiteIndex, SceneVector> read_scene_csv(std::istream& in, WeatherQuantity quantity);

}  // namespace wxc

#endif
