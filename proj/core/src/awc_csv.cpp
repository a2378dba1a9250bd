#include "wxcompress/awc_csv.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include "wxcompress/csv.hpp"
#include "wxcompress/errors.hpp"

namespace wxc {

namespace {

std::optional<double> parse_double(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool is_ceiling_cover(const std::string& s) {
    std::string u;
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    return u == "BKN" || u == "OVC" || u == "OVX" || u == "VV";
}

}  // namespace

std::pair<std::vector<StationObservation>, IngestReport>
parse_awc_csv(std::istream& in, const AwcColumnConfig& cols) {
    if (!in.good()) throw IoError("parse_awc_csv: unreadable input stream");

    CsvReader reader(in);
    auto header = reader.next();
    if (!header) throw FormatError("parse_awc_csv: empty input, no header row");

    auto find_col = [&](const std::string& name) -> long {
        for (std::size_t i = 0; i < header->size(); ++i)
            if ((*header)[i] == name) return static_cast<long>(i);
        return -1;
    };
    auto require_col = [&](const std::string& name) -> long {
        long i = find_col(name);
        if (i < 0) throw FormatError("parse_awc_csv: header missing mandatory column '" + name + "'");
        return i;
    };

    const long c_id = require_col(cols.station_id);
    const long c_time = require_col(cols.observation_time);
    const long c_lat = require_col(cols.latitude);
    const long c_lon = require_col(cols.longitude);
    const long c_temp = find_col(cols.temp_c);
    const long c_vis = find_col(cols.visibility);
    const long c_cat = find_col(cols.flight_category);
    const long c_ceil = find_col(cols.ceiling);
    std::array<long, 4> c_cover{};
    std::array<long, 4> c_base{};
    for (int i = 0; i < 4; ++i) {
        c_cover[i] = find_col(cols.sky_cover[i]);
        c_base[i] = find_col(cols.sky_base[i]);
    }

    std::vector<StationObservation> out;
    IngestReport report;

    while (auto rec = reader.next()) {
        const std::size_t row = reader.line_number();
        const auto& r = *rec;
        auto field = [&](long i) -> std::string {
            return (i >= 0 && static_cast<std::size_t>(i) < r.size()) ? r[i] : std::string();
        };
        auto skip = [&](const std::string& reason) {
            ++report.skipped_count;
            report.skip_reasons.emplace_back(row, reason);
        };

        const std::string id = field(c_id);
        if (id.empty()) {
            skip("empty station id");
            continue;
        }
        auto t = parse_rfc3339(field(c_time));
        if (!t) {
            skip("unparseable observation time '" + field(c_time) + "'");
            continue;
        }
        auto lat = parse_double(field(c_lat));
        if (!lat || *lat < -90 || *lat > 90) {
            skip("invalid latitude '" + field(c_lat) + "'");
            continue;
        }
        auto lon = parse_double(field(c_lon));
        if (!lon || *lon < -180 || *lon > 180) {
            skip("invalid longitude '" + field(c_lon) + "'");
            continue;
        }

        StationObservation o;
        o.station_id = id;
        o.observation_time = *t;
        o.latitude = *lat;
        o.longitude = *lon;

        bool bad = false;
        if (!field(c_temp).empty()) {
            auto v = parse_double(field(c_temp));
            if (!v) { skip("unparseable temperature '" + field(c_temp) + "'"); bad = true; }
            else o.temperature_c = v;
        }
        if (!bad && !field(c_vis).empty()) {
            auto v = parse_double(field(c_vis));
            if (!v || *v < 0) { skip("invalid visibility '" + field(c_vis) + "'"); bad = true; }
            else o.visibility_mi = v;
        }
        if (!bad && !field(c_cat).empty()) {
            auto cat = flight_category_from_string(field(c_cat));
            if (!cat) { skip("unknown flight category '" + field(c_cat) + "'"); bad = true; }
            else o.flight_category = cat;
        }
        if (!bad && !field(c_ceil).empty()) {
            auto v = parse_double(field(c_ceil));
            if (!v || *v < 0) { skip("invalid ceiling '" + field(c_ceil) + "'"); bad = true; }
            else o.ceiling_ft = v;
        }
        if (bad) continue;

        if (!o.ceiling_ft) {
            // Lowest ceiling-forming sky layer.
            for (int i = 0; i < 4; ++i) {
                const std::string cover = field(c_cover[i]);
                if (cover.empty() || !is_ceiling_cover(cover)) continue;
                auto base = parse_double(field(c_base[i]));
                if (!base || *base < 0) continue;
                if (!o.ceiling_ft || *base < *o.ceiling_ft) o.ceiling_ft = base;
            }
        }

        out.push_back(std::move(o));
        ++report.accepted_count;
    }
    return {std::move(out), std::move(report)};
}

void write_observation_csv(std::ostream& out, const std::vector<StationObservation>& obs) {
    out << "station_id,observation_time,latitude,longitude,temp_c,"
           "visibility_statute_mi,ceiling_ft,flight_category\n";
    for (const auto& o : obs) {
        out << csv_escape(o.station_id) << ',' << format_rfc3339(o.observation_time) << ','
            << fmt_double(o.latitude) << ',' << fmt_double(o.longitude) << ',';
        if (o.temperature_c) out << fmt_double(*o.temperature_c);
        out << ',';
        if (o.visibility_mi) out << fmt_double(*o.visibility_mi);
        out << ',';
        if (o.ceiling_ft) out << fmt_double(*o.ceiling_ft);
        out << ',';
        if (o.flight_category) out << to_string(*o.flight_category);
        out << '\n';
    }
}

}  // namespace wxc
