#ifndef WXCOMPRESS_REPORT_HPP
#define WXCOMPRESS_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wxcompress/compress.hpp"

namespace wxc {

// All exports are deterministic: fixed key order, doubles at 17
// significant digits.

void export_curve_csv(std::ostream& out, const CompressibilityCurve& curve);

// GeoJSON FeatureCollection of Point features, coordinates [lon, lat],
// properties {station_id, value}, feature order = SiteIndex order.
void export_scene_geojson(std::ostream& out, const SiteIndex& sites,
                          const Eigen::VectorXd& values);

// One feature per (basis vector, site).  display_class is "suppressed"
// when |component| < display_fraction x the vector's max |component|,
// otherwise "positive"/"negative" by sign.
void export_dominant_geojson(std::ostream& out, const GraphSpectralBasis& basis,
                             const SiteIndex& sites, const std::vector<int>& indices,
                             double display_fraction);

struct RunSummary {
    std::string quantity;
    int n_sites = 0;
    double threshold_mi = 0.0;
    std::string site_fingerprint_hex;
    CompressibilityCurve curve;
    // (basis_index, eigenvalue, coefficient)
    std::vector<std::tuple<int, double, double>> dominant;
    std::optional<ErrorStats> error_stats;
    std::optional<ClassificationStats> classification;
};

// Single JSON object, keys quantity, n_sites, threshold_mi,
// site_fingerprint, levels, dominant, error_stats (null when absent).
void export_summary_json(std::ostream& out, const RunSummary& summary);

}  // namespace wxc

#endif
