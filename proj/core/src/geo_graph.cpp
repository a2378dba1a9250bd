#include "wxcompress/geo_graph.hpp"

#include <cmath>
#include <ostream>
#include <queue>

#include "wxcompress/csv.hpp"
#include "wxcompress/errors.hpp"

namespace wxc {

namespace {
constexpr double kEarthRadiusMi = 3958.8;
constexpr double kDegToRad = M_PI / 180.0;
}  // namespace

double haversine_mi(double lat_a, double lon_a, double lat_b, double lon_b) {
    const double phi1 = lat_a * kDegToRad;
    const double phi2 = lat_b * kDegToRad;
    const double dphi = (lat_b - lat_a) * kDegToRad;
    const double dlam = (lon_b - lon_a) * kDegToRad;
    const double s1 = std::sin(dphi / 2);
    const double s2 = std::sin(dlam / 2);
    const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
    return 2.0 * kEarthRadiusMi * std::asin(std::min(1.0, std::sqrt(h)));
}

ProximityGraph build_graph(const SiteIndex& sites, double threshold_mi) {
    if (threshold_mi <= 0) throw ArgumentError("build_graph: threshold must be positive");
    ProximityGraph g;
    g.n = static_cast<int>(sites.size());
    g.threshold_mi = threshold_mi;
    for (int i = 0; i < g.n; ++i) {
        const auto& a = sites.sites[i];
        for (int j = i + 1; j < g.n; ++j) {
            const auto& b = sites.sites[j];
            if (haversine_mi(a.latitude, a.longitude, b.latitude, b.longitude) < threshold_mi)
                g.edges.emplace_back(i, j);
        }
    }
    return g;
}

LaplacianMatrix laplacian(const ProximityGraph& graph) {
    LaplacianMatrix L;
    L.m = Eigen::MatrixXd::Zero(graph.n, graph.n);
    for (const auto& [i, j] : graph.edges) {
        L.m(i, j) = -1.0;
        L.m(j, i) = -1.0;
        L.m(i, i) += 1.0;
        L.m(j, j) += 1.0;
    }
    return L;
}

std::pair<int, std::vector<int>> connected_components(const ProximityGraph& graph) {
    std::vector<std::vector<int>> adj(graph.n);
    for (const auto& [i, j] : graph.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<int> label(graph.n, -1);
    int count = 0;
    for (int s = 0; s < graph.n; ++s) {
        if (label[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        label[s] = count;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (label[w] < 0) {
                    label[w] = count;
                    q.push(w);
                }
            }
        }
        ++count;
    }
    return {count, std::move(label)};
}

void write_edge_list_csv(std::ostream& out, const ProximityGraph& graph, const SiteIndex& sites) {
    out << "i,j,distance_mi\n";
    for (const auto& [i, j] : graph.edges) {
        const auto& a = sites.sites[i];
        const auto& b = sites.sites[j];
        out << i << ',' << j << ','
            << fmt_double(haversine_mi(a.latitude, a.longitude, b.latitude, b.longitude)) << '\n';
    }
}

}  // namespace wxc
