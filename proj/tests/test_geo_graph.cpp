#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "wxcompress/errors.hpp"
#include "wxcompress/geo_graph.hpp"

using namespace wxc;
using namespace wxc::testing;

TEST_CASE("haversine_mi reference distances") {
    CHECK(haversine_mi(40, -100, 40, -100) == 0.0);
    // one degree of latitude
    CHECK(haversine_mi(40, -100, 41, -100) == doctest::Approx(69.09).epsilon(0.0002));
    // antipodal arc = pi * R
    CHECK(haversine_mi(0, 0, 0, 180) == doctest::Approx(12436.8).epsilon(0.0001));
}

TEST_CASE("haversine_mi symmetry and triangle inequality on random triples") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> lat(-80, 80), lon(-180, 180);
    for (int t = 0; t < 200; ++t) {
        double a1 = lat(rng), o1 = lon(rng), a2 = lat(rng), o2 = lon(rng), a3 = lat(rng),
               o3 = lon(rng);
        const double ab = haversine_mi(a1, o1, a2, o2);
        const double ba = haversine_mi(a2, o2, a1, o1);
        const double bc = haversine_mi(a2, o2, a3, o3);
        const double ac = haversine_mi(a1, o1, a3, o3);
        CHECK(ab == ba);
        CHECK(ab >= 0);
        CHECK(ac <= ab + bc + 1e-9 * (ab + bc + 1));
    }
}

TEST_CASE("build_graph strict threshold") {
    // ~0.72 deg latitude apart: about 50 mi
    SiteIndex sites;
    sites.sites = {{"A", 40.0, -100.0}, {"B", 40.7237, -100.0}};
    sites.fingerprint = fingerprint_sites(sites.sites);
    auto g = build_graph(sites, 70.0);
    CHECK(g.edges.size() == 1);

    // exactly one degree is ~69.09 mi; threshold at that distance means no edge
    SiteIndex far;
    far.sites = {{"A", 40.0, -100.0}, {"B", 41.0, -100.0}};
    far.fingerprint = fingerprint_sites(far.sites);
    const double exact = haversine_mi(40, -100, 41, -100);
    CHECK(build_graph(far, exact).edges.empty());
    CHECK(build_graph(far, exact + 0.001).edges.size() == 1);

    SiteIndex one;
    one.sites = {{"A", 40.0, -100.0}};
    one.fingerprint = fingerprint_sites(one.sites);
    CHECK(build_graph(one, 70.0).edges.empty());

    CHECK_THROWS_AS(build_graph(one, 0.0), ArgumentError);
    CHECK_THROWS_AS(build_graph(one, -5.0), ArgumentError);
}

TEST_CASE("laplacian of small graphs") {
    ProximityGraph path{3, {{0, 1}, {1, 2}}, 70.0};
    auto L = laplacian(path);
    Eigen::MatrixXd expected(3, 3);
    expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    CHECK(L.m == expected);

    ProximityGraph edgeless{2, {}, 70.0};
    CHECK(laplacian(edgeless).m == Eigen::MatrixXd::Zero(2, 2));

    ProximityGraph triangle{3, {{0, 1}, {0, 2}, {1, 2}}, 70.0};
    auto T = laplacian(triangle);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(T.m(i, j) == (i == j ? 2.0 : -1.0));
}

TEST_CASE("laplacian invariants on random graphs") {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        auto sites = random_sites(rng, 40);
        auto g = build_graph(sites, 120.0);
        auto L = laplacian(g);
        CHECK(L.m == L.m.transpose().eval());
        for (int i = 0; i < g.n; ++i) CHECK(std::abs(L.m.row(i).sum()) <= 1e-12);
        CHECK(L.m.trace() == doctest::Approx(2.0 * g.edges.size()));
    }
}

TEST_CASE("build_graph commutes with site permutation up to relabeling") {
    std::mt19937 rng(13);
    auto sites = random_sites(rng, 30);
    auto g = build_graph(sites, 120.0);

    std::vector<int> perm(30);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SiteIndex shuffled;
    for (int i : perm) shuffled.sites.push_back(sites.sites[i]);
    shuffled.fingerprint = fingerprint_sites(shuffled.sites);
    auto g2 = build_graph(shuffled, 120.0);

    // map: original index -> position in shuffled list
    std::vector<int> where(30);
    for (int pos = 0; pos < 30; ++pos) where[perm[pos]] = pos;
    auto canon = [](std::vector<std::pair<int, int>> edges) {
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    std::vector<std::pair<int, int>> mapped;
    for (auto [i, j] : g.edges) {
        int a = where[i], b = where[j];
        mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    CHECK(canon(mapped) == canon(g2.edges));
}

TEST_CASE("connected_components") {
    ProximityGraph path{3, {{0, 1}, {1, 2}}, 70.0};
    CHECK(connected_components(path).first == 1);

    ProximityGraph isolated{2, {}, 70.0};
    auto [count, labels] = connected_components(isolated);
    CHECK(count == 2);
    CHECK(labels[0] != labels[1]);

    ProximityGraph empty{0, {}, 70.0};
    auto [c0, l0] = connected_components(empty);
    CHECK(c0 == 0);
    CHECK(l0.empty());
}
