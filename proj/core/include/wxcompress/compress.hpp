#ifndef WXCOMPRESS_COMPRESS_HPP
#define WXCOMPRESS_COMPRESS_HPP

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "wxcompress/spectral.hpp"

namespace wxc {

// Spectral analysis of one scene: coefficients of x in the graph-spectral
// basis, s_hat = V^T x.
struct SpectralCoefficients {
    Fingerprint site_fingerprint{};
    Eigen::VectorXd coeffs;
    double total_energy = 0.0;  // ||s_hat||_2^2
};

// The K retained coefficients, sorted by descending magnitude; magnitude
// ties broken by ascending basis index.
struct SparseApproximation {
    int k = 0;
    std::vector<std::pair<int, double>> entries;  // (basis index, coefficient)
};

struct CompressibilityCurve {
    std::vector<std::pair<int, double>> points;  // (K, level), K strictly increasing
};

struct EnsembleStats {
    int k = 0;
    double mean_level = 0.0;
    double min_level = 0.0;
    std::size_t scene_count = 0;
};

struct ErrorStats {
    std::vector<std::pair<double, double>> fraction_within;  // (threshold, fraction)
    double max_abs_error = 0.0;
};

struct ClassificationStats {
    double accuracy = 0.0;
    std::optional<double> recall;  // absent when x has no positives
};

// s_hat = V^T x.  Throws FingerprintMismatchError when the scene was
// built from different sites than the basis.
SpectralCoefficients analyze(const GraphSpectralBasis& basis, const SceneVector& x);

SparseApproximation top_k(const SpectralCoefficients& coeffs, int k);

// L = (energy of the top-k coefficients) / total energy; lies in [k/n, 1].
// Throws UndefinedLevelError on a zero-energy scene.
double compressibility_level(const SpectralCoefficients& coeffs, int k);

// One (K, L) point per entry of the ascending k list.
CompressibilityCurve compressibility_curve(const SpectralCoefficients& coeffs,
                                           const std::vector<int>& k_list);

// x* = F s*
Eigen::VectorXd synthesize(const GraphSpectralBasis& basis, const SparseApproximation& sparse);

// Scale the direct reconstruction to the original scene's energy, then
// round half-up and clamp each entry to {0, 1}.
Eigen::VectorXd reconstruct_categorical(const GraphSpectralBasis& basis,
                                        const SparseApproximation& sparse, double original_norm);

// Indices of the `count` largest-magnitude coefficients, descending.
std::vector<int> dominant_vectors(const SpectralCoefficients& coeffs, int count);

ErrorStats reconstruction_error_stats(const Eigen::VectorXd& x, const Eigen::VectorXd& x_hat,
                                      const std::vector<double>& thresholds);

ClassificationStats classification_stats(const Eigen::VectorXd& x, const Eigen::VectorXd& x_hat);

EnsembleStats ensemble_stats(const std::vector<SpectralCoefficients>& scenes, int k);

}  // namespace wxc

#endif
