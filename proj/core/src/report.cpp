#include "wxcompress/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "wxcompress/csv.hpp"
#include "wxcompress/errors.hpp"

namespace wxc {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

void write_point_feature(std::ostream& out, const Site& s, const std::string& extra_props) {
    out << R"({"type":"Feature","geometry":{"type":"Point","coordinates":[)"
        << fmt_double(s.longitude) << ',' << fmt_double(s.latitude) << R"(]},"properties":{)"
        << R"("station_id":")" << json_escape(s.station_id) << '"' << extra_props << "}}";
}

}  // namespace

void export_curve_csv(std::ostream& out, const CompressibilityCurve& curve) {
    out << "K,level\n";
    for (const auto& [k, level] : curve.points) out << k << ',' << fmt_double(level) << '\n';
}

void export_scene_geojson(std::ostream& out, const SiteIndex& sites,
                          const Eigen::VectorXd& values) {
    if (values.size() != static_cast<long>(sites.size()))
        throw ArgumentError("export_scene_geojson: site/value length mismatch");
    out << R"({"type":"FeatureCollection","features":[)";
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (i > 0) out << ',';
        write_point_feature(out, sites.sites[i],
                            ",\"value\":" + fmt_double(values(static_cast<long>(i))));
    }
    out << "]}\n";
}

void export_dominant_geojson(std::ostream& out, const GraphSpectralBasis& basis,
                             const SiteIndex& sites, const std::vector<int>& indices,
                             double display_fraction) {
    if (display_fraction <= 0.0 || display_fraction > 1.0)
        throw ArgumentError("export_dominant_geojson: display_fraction must be in (0, 1]");
    if (basis.n != static_cast<int>(sites.size()))
        throw ArgumentError("export_dominant_geojson: basis/site size mismatch");
    for (int idx : indices)
        if (idx < 0 || idx >= basis.n)
            throw ArgumentError("export_dominant_geojson: basis index " + std::to_string(idx) +
                                " out of range");

    out << R"({"type":"FeatureCollection","features":[)";
    bool first = true;
    for (int idx : indices) {
        const Eigen::VectorXd v = basis.eigenvectors.col(idx);
        const double cutoff = display_fraction * v.cwiseAbs().maxCoeff();
        for (std::size_t i = 0; i < sites.size(); ++i) {
            const double comp = v(static_cast<long>(i));
            const char* cls = std::abs(comp) < cutoff ? "suppressed"
                              : comp >= 0            ? "positive"
                                                     : "negative";
            if (!first) out << ',';
            first = false;
            write_point_feature(out, sites.sites[i],
                                ",\"basis_index\":" + std::to_string(idx) +
                                    ",\"eigenvalue\":" + fmt_double(basis.eigenvalues(idx)) +
                                    ",\"component\":" + fmt_double(comp) +
                                    ",\"display_class\":\"" + cls + "\"");
        }
    }
    out << "]}\n";
}

void export_summary_json(std::ostream& out, const RunSummary& summary) {
    out << "{\"quantity\":\"" << json_escape(summary.quantity) << "\",";
    out << "\"n_sites\":" << summary.n_sites << ',';
    out << "\"threshold_mi\":" << fmt_double(summary.threshold_mi) << ',';
    out << "\"site_fingerprint\":\"" << summary.site_fingerprint_hex << "\",";

    out << "\"levels\":[";
    for (std::size_t i = 0; i < summary.curve.points.size(); ++i) {
        if (i > 0) out << ',';
        out << "{\"k\":" << summary.curve.points[i].first
            << ",\"level\":" << fmt_double(summary.curve.points[i].second) << '}';
    }
    out << "],";

    out << "\"dominant\":[";
    for (std::size_t i = 0; i < summary.dominant.size(); ++i) {
        if (i > 0) out << ',';
        const auto& [idx, eig, coef] = summary.dominant[i];
        out << "{\"basis_index\":" << idx << ",\"eigenvalue\":" << fmt_double(eig)
            << ",\"coefficient\":" << fmt_double(coef) << '}';
    }
    out << "],";

    out << "\"error_stats\":";
    if (summary.error_stats) {
        out << "{\"max_abs_error\":" << fmt_double(summary.error_stats->max_abs_error)
            << ",\"fraction_within\":[";
        for (std::size_t i = 0; i < summary.error_stats->fraction_within.size(); ++i) {
            if (i > 0) out << ',';
            const auto& [t, f] = summary.error_stats->fraction_within[i];
            out << "{\"threshold\":" << fmt_double(t) << ",\"fraction\":" << fmt_double(f) << '}';
        }
        out << "]}";
    } else if (summary.classification) {
        out << "{\"accuracy\":" << fmt_double(summary.classification->accuracy) << ",\"recall\":";
        if (summary.classification->recall)
            out << fmt_double(*summary.classification->recall);
        else
            out << "null";
        out << '}';
    } else {
        out << "null";
    }
    out << "}\n";
}

}  // namespace wxc
