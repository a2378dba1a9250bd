// Command-line pipeline: ingest -> scene -> basis -> analyze/reconstruct.
// Diagnostics go to stderr, data to files.  Exit codes: 0 success,
// 2 argument, 3 I/O, 4 format, 5 empty scene, 6 numerical failure,
// 7 fingerprint mismatch.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wxcompress/csv.hpp"
#include "wxcompress/wxcompress.hpp"

namespace fs = std::filesystem;
using namespace wxc;

namespace {

struct CommonOpts {
    std::string out_dir = ".";
};

BoundingBox parse_bbox(const std::string& text) {
    BoundingBox box;
    char c1, c2, c3;
    std::istringstream iss(text);
    if (!(iss >> box.south >> c1 >> box.north >> c2 >> box.west >> c3 >> box.east) || c1 != ',' ||
        c2 != ',' || c3 != ',')
        throw ArgumentError("--bbox expects S,N,W,E (degrees), got '" + text + "'");
    return box;
}

TimeWindow parse_window(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ArgumentError("--window expects START,END (RFC-3339), got '" + text + "'");
    auto start = parse_rfc3339(text.substr(0, comma));
    auto end = parse_rfc3339(text.substr(comma + 1));
    if (!start || !end)
        throw ArgumentError("--window expects RFC-3339 timestamps, got '" + text + "'");
    if (*start >= *end) throw ArgumentError("--window start must precede end");
    return {*start, *end};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream iss(text);
    std::string item;
    while (std::getline(iss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ArgumentError("unparseable integer '" + item + "' in list");
        }
    }
    if (out.empty()) throw ArgumentError("empty integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream iss(text);
    std::string item;
    while (std::getline(iss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ArgumentError("unparseable number '" + item + "' in list");
        }
    }
    return out;
}

WeatherQuantity parse_quantity(const std::string& text) {
    auto q = weather_quantity_from_string(text);
    if (!q)
        throw ArgumentError("--quantity must be temperature, flight-category or "
                            "visibility-reduction, got '" + text + "'");
    return *q;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file " + path);
    return in;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file " + path.string());
    return out;
}

void print_ingest_report(const IngestReport& report) {
    std::cerr << "accepted " << report.accepted_count << ", skipped " << report.skipped_count
              << "\n";
    for (const auto& [row, reason] : report.skip_reasons)
        std::cerr << "  row " << row << ": " << reason << "\n";
}

std::pair<SiteIndex, SceneVector> load_scene(const std::string& path, WeatherQuantity quantity) {
    auto in = open_input(path);
    return read_scene_csv(in, quantity);
}

int run_ingest(const std::string& input, const std::string& format, const std::string& stations,
               const BoundingBox& box, const TimeWindow& window, const std::string& out_dir) {
    std::vector<StationObservation> obs;
    IngestReport report;

    if (format == "awc-csv") {
        auto in = open_input(input);
        std::tie(obs, report) = parse_awc_csv(in);
    } else if (format == "metar-text") {
        if (stations.empty())
            throw ArgumentError("--stations is required with --format metar-text");
        StationTable table;
        {
            auto in = open_input(stations);
            table = load_station_table(in);
        }
        auto in = open_input(input);
        std::vector<PartialObservation> partials;
        IngestReport parse_report;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                partials.push_back(parse_metar_text(line));
            } catch (const ParseError& e) {
                ++parse_report.skipped_count;
                parse_report.skip_reasons.emplace_back(line_no, e.what());
            }
        }
        // Resolve DDHHMMZ time groups against the window's month.
        std::int64_t days = window.start / 86400;
        std::int64_t z = days + 719468;
        const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
        const unsigned doe = static_cast<unsigned>(z - era * 146097);
        const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
        const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
        const unsigned mp = (5 * doy + 2) / 153;
        ReferenceMonth ref;
        ref.month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
        ref.year = static_cast<int>(yoe + era * 400 + (ref.month <= 2 ? 1 : 0));
        auto [joined, join_report] = join_locations(partials, table, ref);
        obs = std::move(joined);
        report = join_report;
        report.skipped_count += parse_report.skipped_count;
        report.skip_reasons.insert(report.skip_reasons.begin(), parse_report.skip_reasons.begin(),
                                   parse_report.skip_reasons.end());
    } else {
        throw ArgumentError("--format must be awc-csv or metar-text, got '" + format + "'");
    }

    // Category fallback: derive from ceiling/visibility when absent.
    for (auto& o : obs)
        if (!o.flight_category)
            o.flight_category = derive_flight_category(o.ceiling_ft, o.visibility_mi);

    obs = filter_observations(obs, box, window);

    fs::create_directories(out_dir);
    auto out = open_output(fs::path(out_dir) / "observations.csv");
    write_observation_csv(out, obs);
    print_ingest_report(report);
    std::cerr << obs.size() << " observations in box/window -> " << out_dir
              << "/observations.csv\n";
    return 0;
}

int run_scene(const std::string& input, WeatherQuantity quantity, const std::string& out_dir) {
    auto in = open_input(input);
    auto [obs, report] = parse_awc_csv(in);
    auto [sites, scene] = build_scene(obs, quantity);
    fs::create_directories(out_dir);
    auto out = open_output(fs::path(out_dir) / "scene.csv");
    write_scene_csv(out, sites, scene);
    std::cerr << "scene: " << sites.size() << " sites, quantity " << to_string(quantity) << " -> "
              << out_dir << "/scene.csv\n";
    return 0;
}

int run_basis(const std::string& scene_path, WeatherQuantity quantity, double threshold_mi,
              const std::string& out_dir) {
    if (threshold_mi <= 0) throw ArgumentError("--threshold-mi must be positive");
    auto [sites, scene] = load_scene(scene_path, quantity);
    auto graph = build_graph(sites, threshold_mi);
    auto [components, labels] = connected_components(graph);
    auto L = laplacian(graph);
    auto basis = eigendecompose(L, sites, threshold_mi);
    fs::create_directories(out_dir);
    const auto dest = (fs::path(out_dir) / "basis.gsb").string();
    save_basis(basis, sites, dest);
    std::cerr << "n=" << basis.n << " edges=" << graph.edges.size()
              << " components=" << components
              << " lambda2=" << (basis.n > 1 ? basis.eigenvalues(1) : 0.0) << " -> " << dest
              << "\n";
    return 0;
}

int run_analyze(const std::string& scene_path, const std::string& basis_path,
                WeatherQuantity quantity, const std::vector<int>& k_list, int dominant_count,
                double display_fraction, const std::string& out_dir) {
    auto [sites, scene] = load_scene(scene_path, quantity);
    auto [basis, basis_sites] = load_basis(basis_path);
    auto coeffs = analyze(basis, scene);

    auto curve = compressibility_curve(coeffs, k_list);
    fs::create_directories(out_dir);
    {
        auto out = open_output(fs::path(out_dir) / "curve.csv");
        export_curve_csv(out, curve);
    }

    auto dominant = dominant_vectors(coeffs, dominant_count);
    if (dominant_count > 0) {
        auto out = open_output(fs::path(out_dir) / "dominant.geojson");
        export_dominant_geojson(out, basis, sites, dominant, display_fraction);
    }

    RunSummary summary;
    summary.quantity = to_string(quantity);
    summary.n_sites = basis.n;
    summary.threshold_mi = basis.threshold_mi;
    summary.site_fingerprint_hex = to_hex(basis.site_fingerprint);
    summary.curve = curve;
    for (int idx : dominant)
        summary.dominant.emplace_back(idx, basis.eigenvalues(idx), coeffs.coeffs(idx));
    {
        auto out = open_output(fs::path(out_dir) / "summary.json");
        export_summary_json(out, summary);
    }
    for (const auto& [k, level] : curve.points)
        std::cerr << "L(" << k << ") = " << level << "\n";
    return 0;
}

int run_reconstruct(const std::string& scene_path, const std::string& basis_path,
                    WeatherQuantity quantity, int k, const std::vector<double>& thresholds,
                    const std::string& out_dir) {
    auto [sites, scene] = load_scene(scene_path, quantity);
    auto [basis, basis_sites] = load_basis(basis_path);
    auto coeffs = analyze(basis, scene);
    if (k < 0 || k > basis.n) throw ArgumentError("--k out of range [0, " + std::to_string(basis.n) + "]");
    auto sparse = top_k(coeffs, k);

    Eigen::VectorXd recon;
    RunSummary summary;
    summary.quantity = to_string(quantity);
    summary.n_sites = basis.n;
    summary.threshold_mi = basis.threshold_mi;
    summary.site_fingerprint_hex = to_hex(basis.site_fingerprint);

    if (quantity == WeatherQuantity::FlightCategory) {
        recon = reconstruct_categorical(basis, sparse, scene.values.norm());
        auto stats = classification_stats(scene.values, recon);
        summary.classification = stats;
        std::cerr << "accuracy " << stats.accuracy;
        if (stats.recall) std::cerr << ", non-VFR recall " << *stats.recall;
        std::cerr << "\n";
    } else {
        recon = synthesize(basis, sparse);
        auto stats = reconstruction_error_stats(scene.values, recon, thresholds);
        summary.error_stats = stats;
        std::cerr << "max abs error " << stats.max_abs_error << "\n";
        for (const auto& [t, f] : stats.fraction_within)
            std::cerr << "within " << t << ": " << f * 100 << "% of sites\n";
    }

    fs::create_directories(out_dir);
    {
        auto out = open_output(fs::path(out_dir) / "reconstruction.csv");
        out << "station_id,latitude,longitude,original,reconstructed\n";
        for (std::size_t i = 0; i < sites.size(); ++i) {
            const auto& s = sites.sites[i];
            out << csv_escape(s.station_id) << ',' << fmt_double(s.latitude) << ','
                << fmt_double(s.longitude) << ',' << fmt_double(scene.values(static_cast<long>(i)))
                << ',' << fmt_double(recon(static_cast<long>(i))) << '\n';
        }
    }
    {
        auto out = open_output(fs::path(out_dir) / "error_stats.json");
        export_summary_json(out, summary);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-spectral compression of aviation weather scenes"};
    app.require_subcommand(1);

    std::string input, format = "awc-csv", stations, out_dir = ".";
    std::string bbox_text = "25.1,45.4,-124.8,-66.9";
    std::string window_text, quantity_text = "temperature";
    std::string scene_path, basis_path;
    std::string k_list_text = "10,50,100", thresholds_text = "2,5";
    double threshold_mi = 70.0, display_fraction = 0.25;
    int k = 50, dominant_count = 0;

    auto* ingest = app.add_subcommand("ingest", "Parse raw reports into the observation CSV");
    ingest->add_option("--input", input, "Input file")->required();
    ingest->add_option("--format", format, "awc-csv or metar-text");
    ingest->add_option("--stations", stations, "Station table CSV (metar-text only)");
    ingest->add_option("--bbox", bbox_text, "S,N,W,E degrees");
    ingest->add_option("--window", window_text, "START,END RFC-3339 UTC")->required();
    ingest->add_option("--out-dir", out_dir, "Output directory");

    auto* scene_cmd = app.add_subcommand("scene", "Build a scene vector from observations");
    scene_cmd->add_option("--input", input, "Observation CSV")->required();
    scene_cmd->add_option("--quantity", quantity_text,
                          "temperature|flight-category|visibility-reduction");
    scene_cmd->add_option("--out-dir", out_dir, "Output directory");

    auto* basis_cmd = app.add_subcommand("basis", "Build the graph-spectral basis for a scene");
    basis_cmd->add_option("--scene", scene_path, "Scene CSV")->required();
    basis_cmd->add_option("--quantity", quantity_text, "Scene quantity");
    basis_cmd->add_option("--threshold-mi", threshold_mi, "Edge distance threshold (mi)");
    basis_cmd->add_option("--out-dir", out_dir, "Output directory");

    auto* analyze_cmd = app.add_subcommand("analyze", "Compressibility curve and dominant vectors");
    analyze_cmd->add_option("--scene", scene_path, "Scene CSV")->required();
    analyze_cmd->add_option("--basis", basis_path, "Basis .gsb file")->required();
    analyze_cmd->add_option("--quantity", quantity_text, "Scene quantity");
    analyze_cmd->add_option("--k-list", k_list_text, "Comma-separated sparsity values");
    analyze_cmd->add_option("--dominant", dominant_count, "Dominant vector count for GeoJSON");
    analyze_cmd->add_option("--display-fraction", display_fraction,
                            "Suppression threshold as fraction of max |component|");
    analyze_cmd->add_option("--out-dir", out_dir, "Output directory");

    auto* recon_cmd = app.add_subcommand("reconstruct", "K-sparse reconstruction and error stats");
    recon_cmd->add_option("--scene", scene_path, "Scene CSV")->required();
    recon_cmd->add_option("--basis", basis_path, "Basis .gsb file")->required();
    recon_cmd->add_option("--quantity", quantity_text, "Scene quantity");
    recon_cmd->add_option("--k", k, "Sparsity of the approximation");
    recon_cmd->add_option("--thresholds", thresholds_text,
                          "Error thresholds for fraction-within stats");
    recon_cmd->add_option("--out-dir", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ingest->parsed())
            return run_ingest(input, format, stations, parse_bbox(bbox_text),
                              parse_window(window_text), out_dir);
        if (scene_cmd->parsed()) return run_scene(input, parse_quantity(quantity_text), out_dir);
        if (basis_cmd->parsed())
            return run_basis(scene_path, parse_quantity(quantity_text), threshold_mi, out_dir);
        if (analyze_cmd->parsed())
            return run_analyze(scene_path, basis_path, parse_quantity(quantity_text),
                               parse_int_list(k_list_text), dominant_count, display_fraction,
                               out_dir);
        if (recon_cmd->parsed())
            return run_reconstruct(scene_path, basis_path, parse_quantity(quantity_text), k,
                                   parse_double_list(thresholds_text), out_dir);
    } catch (const FingerprintMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 7;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const EmptySceneError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
