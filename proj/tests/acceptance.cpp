// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "test_helpers.hpp"
#include "wxcompress/wxcompress.hpp"

using namespace wxc;
using namespace wxc::testing;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(const char* name, bool pass, const std::string& detail = "") {
    std::printf("%s - %s%s%s\n", pass ? "PASS" : "FAIL", name, detail.empty() ? "" : ": ",
                detail.c_str());
    if (!pass) ++g_failures;
}

Eigen::VectorXd random_normal(std::mt19937& rng, int n) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = gauss(rng);
    return x;
}

// 1. Analytic spectra for path graphs and C4.
void criterion_spectrum_oracle() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 12 && ok; ++n) {
        auto sites = path_sites(n);
        ProximityGraph g;
        g.n = n;
        g.threshold_mi = 40.0;
        for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
        auto basis = eigendecompose(laplacian(g), sites, g.threshold_mi);
        for (int k = 0; k < n; ++k) {
            const double expected = 2.0 - 2.0 * std::cos(k * M_PI / n);
            if (std::abs(basis.eigenvalues(k) - expected) > 1e-8) {
                ok = false;
                detail = "path n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        }
    }
    {
        auto sites = path_sites(4);
        ProximityGraph c4{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 40.0};
        auto basis = eigendecompose(laplacian(c4), sites, 40.0);
        const double expected[] = {0, 2, 2, 4};
        for (int k = 0; k < 4; ++k)
            if (std::abs(basis.eigenvalues(k) - expected[k]) > 1e-8) {
                ok = false;
                detail = "C4 k=" + std::to_string(k);
            }
    }
    report("1 spectrum oracle (paths n=2..12, C4)", ok, detail);
}

// 2. Basis sanity on 50 random geometric graphs.
void criterion_basis_sanity() {
    std::mt19937 rng(1001);
    std::uniform_int_distribution<int> size(20, 200);
    std::uniform_real_distribution<double> thresh(50.0, 150.0);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 50 && ok; ++t) {
        const int n = size(rng);
        auto sites = random_sites(rng, n);
        auto g = build_graph(sites, thresh(rng));
        auto L = laplacian(g);
        auto basis = eigendecompose(L, sites, g.threshold_mi);
        auto d = verify_basis(basis, L);
        const double lam_max = basis.eigenvalues(n - 1);
        if (d.orthonormality_defect > 1e-8) { ok = false; detail = "orthonormality"; }
        if (d.max_residual > 1e-8 * std::max(1.0, lam_max)) { ok = false; detail = "residual"; }
        if (d.zero_eigenvalue_count != connected_components(g).first) {
            ok = false;
            detail = "zero-eigenvalue count";
        }
        const double trace = 2.0 * static_cast<double>(g.edges.size());
        if (trace > 0 && std::abs(basis.eigenvalues.sum() - trace) > 1e-6 * trace) {
            ok = false;
            detail = "trace";
        }
    }
    report("2 basis sanity (50 random geometric graphs)", ok, detail);
}

// 3. Parseval on 100 random scenes.
void criterion_parseval() {
    std::mt19937 rng(1002);
    auto sites = random_sites(rng, 80);
    auto basis = basis_for(sites, 120.0);
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
        Eigen::VectorXd x = random_normal(rng, 80);
        auto c = analyze(basis, scene_from(sites, x));
        if (std::abs(c.coeffs.norm() - x.norm()) > 1e-9 * x.norm()) ok = false;
    }
    report("3 Parseval (100 random scenes)", ok);
}

// 4. Compressibility-level laws on 100 random scenes, all k.
void criterion_level_laws() {
    std::mt19937 rng(1003);
    const int n = 60;
    auto sites = random_sites(rng, n);
    auto basis = basis_for(sites, 120.0);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 100 && ok; ++t) {
        auto c = analyze(basis, scene_from(sites, random_normal(rng, n)));
        double prev = -1.0;
        for (int k = 0; k <= n; ++k) {
            const double l = compressibility_level(c, k);
            if (l < prev) { ok = false; detail = "monotonicity"; }
            if (l < static_cast<double>(k) / n - 1e-12) { ok = false; detail = "lower bound"; }
            prev = l;
        }
        if (std::abs(compressibility_level(c, n) - 1.0) > 1e-9) { ok = false; detail = "L(n)=1"; }
    }
    report("4 compressibility-level laws (100 random scenes)", ok, detail);
}

// 5. Brute-force optimality for n <= 10.
void criterion_brute_force() {
    std::mt19937 rng(1004);
    std::uniform_int_distribution<int> size(2, 10);
    std::normal_distribution<double> gauss;
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
        const int n = size(rng);
        SpectralCoefficients c;
        c.coeffs.resize(n);
        for (int i = 0; i < n; ++i) c.coeffs(i) = gauss(rng);
        c.total_energy = c.coeffs.squaredNorm();
        for (int k = 0; k <= n && ok; ++k) {
            double captured = 0.0;
            for (auto& [idx, v] : top_k(c, k).entries) captured += v * v;
            double best = 0.0;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != k) continue;
                double e = 0.0;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) e += c.coeffs(i) * c.coeffs(i);
                best = std::max(best, e);
            }
            if (std::abs(captured - best) > 1e-12) ok = false;
        }
    }
    report("5 brute-force top-k optimality (20 instances, n<=10)", ok);
}

// 6. Scenes built from k basis columns are exactly k-compressible.
void criterion_exact_compressibility() {
    std::mt19937 rng(1005);
    auto sites = random_sites(rng, 40);
    auto basis = basis_for(sites, 120.0);
    bool ok = true;
    for (int k : {1, 3, 5}) {
        std::vector<int> cols(40);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(cols.begin(), cols.end(), rng);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(40);
        for (int i = 0; i < k; ++i) x += (1.0 + i) * basis.eigenvectors.col(cols[i]);
        auto c = analyze(basis, scene_from(sites, x));
        if (compressibility_level(c, k) < 1.0 - 1e-9) ok = false;
    }
    report("6 exact compressibility (k in {1,3,5})", ok);
}

// 7. Round-trip at k = n, numeric and categorical.
void criterion_round_trip() {
    std::mt19937 rng(1006);
    auto sites = random_sites(rng, 50);
    auto basis = basis_for(sites, 120.0);
    bool ok = true;

    Eigen::VectorXd x = random_normal(rng, 50);
    auto c = analyze(basis, scene_from(sites, x));
    auto recon = synthesize(basis, top_k(c, 50));
    if ((recon - x).cwiseAbs().maxCoeff() > 1e-8) ok = false;

    Eigen::VectorXd b(50);
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < 50; ++i) b(i) = coin(rng) ? 1.0 : 0.0;
    auto cb = analyze(basis, scene_from(sites, b, WeatherQuantity::FlightCategory));
    auto cat = reconstruct_categorical(basis, top_k(cb, 50), b.norm());
    auto stats = classification_stats(b, cat);
    if (stats.accuracy != 1.0) ok = false;

    report("7 round-trip at k=n (numeric within 1e-8, categorical exact)", ok);
}

// 8. Smoothness separation on a pinned n=500 geometric graph.
void criterion_smoothness_separation() {
    std::mt19937 rng(2);  // seed pinned to a connected instance
    const int n = 500;
    auto sites = random_sites(rng, n, 30.0, 40.0, -110.0, -90.0);
    auto g = build_graph(sites, 70.0);
    const int components = connected_components(g).first;
    if (components != 1) {
        report("8 smoothness separation (n=500)", false,
               "pinned graph not connected (" + std::to_string(components) + " components)");
        return;
    }
    auto basis = eigendecompose(laplacian(g), sites, 70.0);

    Eigen::VectorXd smooth(n);
    for (int i = 0; i < n; ++i) {
        const auto& s = sites.sites[i];
        smooth(i) = (s.latitude - 35.0) / 5.0 + (s.longitude + 100.0) / 10.0 +
                    std::sin(2.0 * M_PI * (s.longitude + 110.0) / 40.0);
    }
    Eigen::VectorXd noise = random_normal(rng, n);

    const double l_smooth =
        compressibility_level(analyze(basis, scene_from(sites, smooth)), 25);
    const double l_noise = compressibility_level(analyze(basis, scene_from(sites, noise)), 25);
    std::ostringstream detail;
    detail << "L_smooth(25)=" << l_smooth << ", L_noise(25)=" << l_noise;
    report("8 smoothness separation (n=500, margin >= 0.2)", l_smooth - l_noise >= 0.2,
           detail.str());
}

// 9. Persistence round trip and error taxonomy.
void criterion_persistence() {
    std::mt19937 rng(1008);
    auto sites = random_sites(rng, 20);
    auto basis = basis_for(sites, 120.0);
    const fs::path dir = fs::temp_directory_path() / "wxc_acceptance";
    fs::create_directories(dir);
    const auto p = dir / "basis.gsb";
    bool ok = true;
    std::string detail;

    save_basis(basis, sites, p.string());
    auto [loaded, loaded_sites] = load_basis(p.string());
    if (loaded.eigenvalues != basis.eigenvalues || loaded.eigenvectors != basis.eigenvectors) {
        ok = false;
        detail = "round trip not bit-identical";
    }

    auto bytes = [&] {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }();
    auto rewrite = [&](const std::string& data) {
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
    };

    rewrite("XXXX" + bytes.substr(4));
    try {
        load_basis(p.string());
        ok = false;
        detail = "bad magic accepted";
    } catch (const CorruptionError&) {
        ok = false;
        detail = "bad magic raised the wrong error";
    } catch (const FormatError&) {
    }

    rewrite(bytes.substr(0, bytes.size() / 2));
    try {
        load_basis(p.string());
        ok = false;
        detail = "truncated file accepted";
    } catch (const FormatError&) {
    }

    auto corrupted = bytes;
    corrupted[4 + 4 + 4 + 8 + 32 + 2] ^= 0x01;  // inside the first station id
    rewrite(corrupted);
    try {
        load_basis(p.string());
        ok = false;
        detail = "fingerprint mismatch accepted";
    } catch (const CorruptionError&) {
    }

    fs::remove_all(dir);
    report("9 persistence round trip and error taxonomy", ok, detail);
}

// 10. Parser corpus: the three reference reports plus a 50-line fuzz set.
void criterion_parser_corpus() {
    bool ok = true;
    std::string detail;
    try {
        auto a = parse_metar_text("KSEA 181753Z 18004KT 10SM FEW025 BKN250 12/08 A3022");
        if (a.temperature_c != 12.0 || a.visibility_mi != 10.0 || a.ceiling_ft != 25000.0) {
            ok = false;
            detail = "KSEA decode";
        }
        auto b = parse_metar_text("KBOS 181754Z 02015G25KT 1/2SM SN OVC005 M03/M05 A2990");
        if (b.temperature_c != -3.0 || b.visibility_mi != 0.5 || b.ceiling_ft != 500.0) {
            ok = false;
            detail = "KBOS decode";
        }
        auto c = parse_metar_text("KPHX 181751Z 00000KT 10SM CLR 18/02 A3010");
        if (c.temperature_c != 18.0 || c.visibility_mi != 10.0 || c.ceiling_ft.has_value()) {
            ok = false;
            detail = "KPHX decode";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }

    const std::vector<std::string> seeds = {
        "KSEA 181753Z 18004KT 10SM FEW025 BKN250 12/08 A3022",
        "KBOS 181754Z 02015G25KT 1/2SM SN OVC005 M03/M05 A2990",
        "KPHX 181751Z 00000KT 10SM CLR 18/02 A3010",
    };
    std::mt19937 rng(1010);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(seeds.size()) - 1);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int t = 0; t < 50; ++t) {
        std::string line = seeds[pick(rng)];
        std::uniform_int_distribution<std::size_t> pos(0, line.size() - 1);
        switch (t % 4) {
            case 0: line[pos(rng)] = static_cast<char>(byte(rng)); break;
            case 1: line = line.substr(pos(rng)); break;
            case 2: line.insert(pos(rng), 1, static_cast<char>(byte(rng))); break;
            case 3: std::shuffle(line.begin(), line.begin() + static_cast<long>(pos(rng)) + 1, rng); break;
        }
        try {
            auto o = parse_metar_text(line);
            if (o.station_id.empty()) { ok = false; detail = "empty id accepted"; }
            if (o.visibility_mi && *o.visibility_mi < 0) { ok = false; detail = "negative vis"; }
            if (o.ceiling_ft && *o.ceiling_ft < 0) { ok = false; detail = "negative ceiling"; }
        } catch (const ParseError&) {
            // fine: rejected, not crashed
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("unexpected exception: ") + e.what();
        }
    }
    report("10 parser corpus (reference reports + 50-line fuzz)", ok, detail);
}

}  // namespace

int main() {
    criterion_spectrum_oracle();
    criterion_basis_sanity();
    criterion_parseval();
    criterion_level_laws();
    criterion_brute_force();
    criterion_exact_compressibility();
    criterion_round_trip();
    criterion_smoothness_separation();
    criterion_persistence();
    criterion_parser_corpus();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
