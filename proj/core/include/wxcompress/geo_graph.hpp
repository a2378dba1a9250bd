#ifndef WXCOMPRESS_GEO_GRAPH_HPP
#define WXCOMPRESS_GEO_GRAPH_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <utility>
#include <vector>

#include "wxcompress/scene.hpp"

namespace wxc {

// Unweighted distance-threshold graph over the site locations.
struct ProximityGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, no duplicates
    double threshold_mi = 0.0;
};

struct LaplacianMatrix {
    Eigen::MatrixXd m;  // symmetric, -1 off-diagonals on edges, degree diagonal
};

// Great-circle distance in statute miles (Earth radius 3958.8 mi).
double haversine_mi(double lat_a, double lon_a, double lat_b, double lon_b);

// Edge between i and j iff haversine distance is strictly below the
// threshold.  Throws ArgumentError for a non-positive threshold.
ProximityGraph build_graph(const SiteIndex& sites, double threshold_mi);

LaplacianMatrix laplacian(const ProximityGraph& graph);

// (component count, per-vertex labels in [0, count))
std::pair<int, std::vector<int>> connected_components(const ProximityGraph& graph);

// Debug dump: CSV edge list i,j,distance_mi.
void write_edge_list_csv(std::ostream& out, const ProximityGraph& graph, const SiteIndex& sites);

}  // namespace wxc

#endif
