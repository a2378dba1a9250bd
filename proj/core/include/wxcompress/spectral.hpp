#ifndef WXCOMPRESS_SPECTRAL_HPP
#define WXCOMPRESS_SPECTRAL_HPP

#include <Eigen/Core>

#include "wxcompress/geo_graph.hpp"
#include "wxcompress/scene.hpp"

namespace wxc {

// Full eigendecomposition of the graph Laplacian: ascending eigenvalues,
// orthonormal eigenvector columns.  Column signs are fixed so the entry
// of largest magnitude is positive (ties broken by lowest vertex index),
// which makes files and golden tests reproducible.
struct GraphSpectralBasis {
    int n = 0;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    Fingerprint site_fingerprint{};
    double threshold_mi = 0.0;
};

struct BasisDiagnostics {
    double orthonormality_defect = 0.0;  // max |V^T V - I|
    double max_residual = 0.0;           // max_k ||H v_k - lambda_k v_k||_2
    int zero_eigenvalue_count = 0;       // eigenvalues below 1e-8
    bool ascending = true;
    bool ok = false;
};

// Dense full-spectrum solve.  Throws NumericalError on convergence
// failure.  Deterministic for identical input bits.
GraphSpectralBasis eigendecompose(const LaplacianMatrix& L, const SiteIndex& sites,
                                  double threshold_mi);

// Measures orthonormality defect, eigen-residual and zero-eigenvalue
// count against the basis invariants.  Throws ArgumentError on a
// dimension mismatch.
BasisDiagnostics verify_basis(const GraphSpectralBasis& basis, const LaplacianMatrix& L);

}  // namespace wxc

#endif
