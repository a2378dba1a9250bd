#include "wxcompress/metar.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "wxcompress/csv.hpp"
#include "wxcompress/errors.hpp"

namespace wxc {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string upper(const std::string& s) {
    std::string u;
    u.reserve(s.size());
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    return u;
}

// "12" -> 12, "M05" -> -5; empty/other -> nullopt
std::optional<double> parse_signed_temp(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == 'M' || t[0] == 'm')) {
        neg = true;
        t = t.substr(1);
    }
    if (t.empty() || t.size() > 2 || !all_digits(t)) return std::nullopt;
    double v = std::stod(t);
    return neg ? -v : v;
}

// Visibility group "...SM": "10SM", "1/2SM", "M1/4SM".  Returns the value
// of this token alone; the whole-number part of "1 1/2SM" is handled by
// the caller from the preceding token.
std::optional<double> parse_visibility_sm(const std::string& token, bool* is_fraction) {
    *is_fraction = false;
    if (token.size() < 3) return std::nullopt;
    std::string body = token.substr(0, token.size() - 2);
    if (!body.empty() && (body[0] == 'M' || body[0] == 'm')) body = body.substr(1);  // "less than" prefix
    if (body.empty()) return std::nullopt;
    auto slash = body.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(body)) return std::nullopt;
        return std::stod(body);
    }
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    double d = std::stod(den);
    if (d == 0) return std::nullopt;
    *is_fraction = true;
    return std::stod(num) / d;
}

}  // namespace

PartialObservation parse_metar_text(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);

    std::size_t pos = 0;
    if (pos < tokens.size()) {
        const std::string head = upper(tokens[pos]);
        if (head == "METAR" || head == "SPECI") ++pos;
    }
    if (pos >= tokens.size()) throw ParseError("METAR line has no station id");
    const std::string id_raw = tokens[pos];
    if (!std::all_of(id_raw.begin(), id_raw.end(),
                     [](unsigned char c) { return std::isalnum(c) != 0; }))
        throw ParseError("METAR station id token is not alphanumeric: '" + id_raw + "'");
    PartialObservation out;
    out.station_id = upper(id_raw);
    ++pos;

    bool have_vis = false;
    for (std::size_t i = pos; i < tokens.size(); ++i) {
        const std::string t = upper(tokens[i]);
        if (t == "RMK") break;  // remarks are out of scope

        // Time group DDHHMMZ
        if (!out.day_of_month && t.size() == 7 && t.back() == 'Z' && all_digits(t.substr(0, 6))) {
            int day = std::stoi(t.substr(0, 2));
            int hh = std::stoi(t.substr(2, 2));
            int mm = std::stoi(t.substr(4, 2));
            if (day >= 1 && day <= 31 && hh <= 23 && mm <= 59) {
                out.day_of_month = day;
                out.hour = hh;
                out.minute = mm;
            }
            continue;
        }

        // Visibility "...SM"
        if (!have_vis && t.size() > 2 && t.compare(t.size() - 2, 2, "SM") == 0) {
            bool frac = false;
            auto v = parse_visibility_sm(t, &frac);
            if (v) {
                if (frac && i > pos && all_digits(upper(tokens[i - 1])))
                    *v += std::stod(tokens[i - 1]);  // "1 1/2SM"
                if (*v >= 0) {
                    out.visibility_mi = v;
                    have_vis = true;
                }
            }
            continue;
        }

        // Cloud layers: BKN/OVC count as ceilings, VV (vertical visibility) too.
        if (t.size() >= 5 && (t.compare(0, 3, "BKN") == 0 || t.compare(0, 3, "OVC") == 0)) {
            std::string h = t.substr(3, 3);
            if (all_digits(h)) {
                double ft = std::stod(h) * 100.0;
                if (!out.ceiling_ft || ft < *out.ceiling_ft) out.ceiling_ft = ft;
            }
            continue;
        }
        if (t.size() >= 5 && t.compare(0, 2, "VV") == 0) {
            std::string h = t.substr(2, 3);
            if (all_digits(h)) {
                double ft = std::stod(h) * 100.0;
                if (!out.ceiling_ft || ft < *out.ceiling_ft) out.ceiling_ft = ft;
            }
            continue;
        }

        // Temperature/dewpoint "TT/TD" with optional M prefixes.
        if (!out.temperature_c) {
            auto slash = t.find('/');
            if (slash != std::string::npos && slash > 0) {
                std::string tt = t.substr(0, slash);
                std::string td = t.substr(slash + 1);
                auto temp = parse_signed_temp(tt);
                bool td_ok = td.empty() || parse_signed_temp(td).has_value();
                if (temp && td_ok) {
                    out.temperature_c = temp;
                    continue;
                }
            }
        }
    }
    return out;
}

std::pair<std::vector<StationObservation>, IngestReport>
join_locations(const std::vector<PartialObservation>& partials,
               const StationTable& table,
               const ReferenceMonth& ref) {
    std::vector<StationObservation> out;
    IngestReport report;
    std::size_t row = 0;
    for (const auto& p : partials) {
        ++row;
        auto it = table.find(p.station_id);
        if (it == table.end()) {
            ++report.skipped_count;
            report.skip_reasons.emplace_back(row, "unknown station " + p.station_id);
            continue;
        }
        if (!p.day_of_month) {
            ++report.skipped_count;
            report.skip_reasons.emplace_back(row, "missing time group for " + p.station_id);
            continue;
        }
        StationObservation o;
        o.station_id = p.station_id;
        o.latitude = it->second.first;
        o.longitude = it->second.second;
        o.observation_time = days_from_civil(ref.year, ref.month, *p.day_of_month) * 86400 +
                             *p.hour * 3600 + *p.minute * 60;
        o.temperature_c = p.temperature_c;
        o.visibility_mi = p.visibility_mi;
        o.ceiling_ft = p.ceiling_ft;
        o.flight_category = derive_flight_category(p.ceiling_ft, p.visibility_mi);
        out.push_back(std::move(o));
        ++report.accepted_count;
    }
    return {std::move(out), std::move(report)};
}

StationTable load_station_table(std::istream& in) {
    StationTable table;
    CsvReader reader(in);
    auto header = reader.next();
    if (!header) throw FormatError("station table: empty file");
    auto col = [&](const std::string& name) {
        for (std::size_t i = 0; i < header->size(); ++i)
            if ((*header)[i] == name) return static_cast<long>(i);
        throw FormatError("station table: missing column '" + name + "'");
    };
    const long c_id = col("station_id");
    const long c_lat = col("latitude");
    const long c_lon = col("longitude");
    while (auto rec = reader.next()) {
        const auto& r = *rec;
        long need = std::max({c_id, c_lat, c_lon});
        if (static_cast<long>(r.size()) <= need) continue;
        const std::string& id = r[c_id];
        if (id.empty()) continue;
        try {
            double lat = std::stod(r[c_lat]);
            double lon = std::stod(r[c_lon]);
            if (lat < -90 || lat > 90 || lon < -180 || lon > 180) continue;
            table[id] = {lat, lon};
        } catch (const std::exception&) {
            continue;
        }
    }
    return table;
}

}  // namespace wxc
