#include "wxcompress/compress.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wxcompress/errors.hpp"

namespace wxc {

namespace {

// Basis indices ordered by descending |coefficient|, ties by ascending index.
std::vector<int> magnitude_order(const Eigen::VectorXd& c) {
    std::vector<int> idx(static_cast<std::size_t>(c.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        const double ma = std::abs(c(a));
        const double mb = std::abs(c(b));
        if (ma != mb) return ma > mb;
        return a < b;
    });
    return idx;
}

void check_k(int k, long n, const char* who) {
    if (k < 0 || k > n)
        throw ArgumentError(std::string(who) + ": k out of range [0, " + std::to_string(n) + "]");
}

}  // namespace

SpectralCoefficients analyze(const GraphSpectralBasis& basis, const SceneVector& x) {
    if (basis.site_fingerprint != x.site_fingerprint)
        throw FingerprintMismatchError(
            "analyze: scene fingerprint " + to_hex(x.site_fingerprint) +
            " does not match basis fingerprint " + to_hex(basis.site_fingerprint));
    if (x.values.size() != basis.n)
        throw ArgumentError("analyze: scene length does not match basis size");

    SpectralCoefficients out;
    out.site_fingerprint = x.site_fingerprint;
    out.coeffs = basis.eigenvectors.transpose() * x.values;
    out.total_energy = out.coeffs.squaredNorm();
    return out;
}

SparseApproximation top_k(const SpectralCoefficients& coeffs, int k) {
    check_k(k, coeffs.coeffs.size(), "top_k");
    const auto order = magnitude_order(coeffs.coeffs);
    SparseApproximation out;
    out.k = k;
    for (int i = 0; i < k; ++i) out.entries.emplace_back(order[i], coeffs.coeffs(order[i]));
    return out;
}

double compressibility_level(const SpectralCoefficients& coeffs, int k) {
    check_k(k, coeffs.coeffs.size(), "compressibility_level");
    if (coeffs.total_energy <= 0.0)
        throw UndefinedLevelError("compressibility_level: zero-energy scene");
    const auto order = magnitude_order(coeffs.coeffs);
    double retained = 0.0;
    for (int i = 0; i < k; ++i) {
        const double c = coeffs.coeffs(order[i]);
        retained += c * c;
    }
    return retained / coeffs.total_energy;
}

CompressibilityCurve compressibility_curve(const SpectralCoefficients& coeffs,
                                           const std::vector<int>& k_list) {
    for (std::size_t i = 1; i < k_list.size(); ++i)
        if (k_list[i] <= k_list[i - 1])
            throw ArgumentError("compressibility_curve: k list must be strictly ascending");
    if (!k_list.empty() && coeffs.total_energy <= 0.0)
        throw UndefinedLevelError("compressibility_curve: zero-energy scene");

    const auto order = magnitude_order(coeffs.coeffs);
    CompressibilityCurve curve;
    double retained = 0.0;
    int taken = 0;
    for (int k : k_list) {
        check_k(k, coeffs.coeffs.size(), "compressibility_curve");
        for (; taken < k; ++taken) {
            const double c = coeffs.coeffs(order[taken]);
            retained += c * c;
        }
        curve.points.emplace_back(k, retained / coeffs.total_energy);
    }
    return curve;
}

Eigen::VectorXd synthesize(const GraphSpectralBasis& basis, const SparseApproximation& sparse) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(basis.n);
    for (const auto& [idx, c] : sparse.entries) {
        if (idx < 0 || idx >= basis.n)
            throw ArgumentError("synthesize: basis index " + std::to_string(idx) + " out of range");
        x += c * basis.eigenvectors.col(idx);
    }
    return x;
}

Eigen::VectorXd reconstruct_categorical(const GraphSpectralBasis& basis,
                                        const SparseApproximation& sparse, double original_norm) {
    if (original_norm < 0) throw ArgumentError("reconstruct_categorical: negative original norm");
    Eigen::VectorXd y = synthesize(basis, sparse);
    const double ny = y.norm();
    if (ny == 0.0) {
        if (original_norm == 0.0) return Eigen::VectorXd::Zero(basis.n);
        throw NumericalError("reconstruct_categorical: zero reconstruction for nonzero scene");
    }
    const double alpha = original_norm / ny;
    for (long i = 0; i < y.size(); ++i) {
        const double r = std::floor(alpha * y(i) + 0.5);  // half rounds up
        y(i) = std::clamp(r, 0.0, 1.0);
    }
    return y;
}

std::vector<int> dominant_vectors(const SpectralCoefficients& coeffs, int count) {
    check_k(count, coeffs.coeffs.size(), "dominant_vectors");
    const auto order = magnitude_order(coeffs.coeffs);
    return std::vector<int>(order.begin(), order.begin() + count);
}

ErrorStats reconstruction_error_stats(const Eigen::VectorXd& x, const Eigen::VectorXd& x_hat,
                                      const std::vector<double>& thresholds) {
    if (x.size() != x_hat.size())
        throw ArgumentError("reconstruction_error_stats: length mismatch");
    for (double t : thresholds)
        if (t < 0) throw ArgumentError("reconstruction_error_stats: negative threshold");

    const long n = x.size();
    ErrorStats stats;
    Eigen::VectorXd err = (x - x_hat).cwiseAbs();
    stats.max_abs_error = (n > 0) ? err.maxCoeff() : 0.0;
    for (double t : thresholds) {
        long within = 0;
        for (long i = 0; i < n; ++i)
            if (err(i) <= t) ++within;
        stats.fraction_within.emplace_back(t, n > 0 ? static_cast<double>(within) / n : 0.0);
    }
    return stats;
}

ClassificationStats classification_stats(const Eigen::VectorXd& x, const Eigen::VectorXd& x_hat) {
    if (x.size() != x_hat.size()) throw ArgumentError("classification_stats: length mismatch");
    const long n = x.size();
    if (n == 0) throw ArgumentError("classification_stats: empty vectors");
    for (long i = 0; i < n; ++i)
        if ((x(i) != 0.0 && x(i) != 1.0) || (x_hat(i) != 0.0 && x_hat(i) != 1.0))
            throw ArgumentError("classification_stats: inputs must be binary");

    long matches = 0, positives = 0, hits = 0;
    for (long i = 0; i < n; ++i) {
        if (x(i) == x_hat(i)) ++matches;
        if (x(i) == 1.0) {
            ++positives;
            if (x_hat(i) == 1.0) ++hits;
        }
    }
    ClassificationStats stats;
    stats.accuracy = static_cast<double>(matches) / n;
    if (positives > 0) stats.recall = static_cast<double>(hits) / positives;
    return stats;
}

EnsembleStats ensemble_stats(const std::vector<SpectralCoefficients>& scenes, int k) {
    if (scenes.empty()) throw ArgumentError("ensemble_stats: empty scene list");
    EnsembleStats out;
    out.k = k;
    out.scene_count = scenes.size();
    double sum = 0.0;
    double min_l = 1.0;
    for (const auto& s : scenes) {
        const double l = compressibility_level(s, k);
        sum += l;
        min_l = std::min(min_l, l);
    }
    out.mean_level = sum / static_cast<double>(scenes.size());
    out.min_level = min_l;
    return out;
}

}  // namespace wxc
