#include "wxcompress/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "wxcompress/errors.hpp"

namespace wxc {

namespace {
constexpr double kZeroEigTol = 1e-8;
}

GraphSpectralBasis eigendecompose(const LaplacianMatrix& L, const SiteIndex& sites,
                                  double threshold_mi) {
    const long n = L.m.rows();
    if (n != static_cast<long>(sites.size()))
        throw ArgumentError("eigendecompose: Laplacian size does not match site count");

    GraphSpectralBasis basis;
    basis.n = static_cast<int>(n);
    basis.site_fingerprint = sites.fingerprint;
    basis.threshold_mi = threshold_mi;
    if (n == 0) return basis;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L.m);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigendecompose: eigensolver failed to converge");

    basis.eigenvalues = solver.eigenvalues();  // ascending
    basis.eigenvectors = solver.eigenvectors();

    // Sign convention: largest-magnitude entry positive, ties to the
    // lowest vertex index.
    for (long k = 0; k < n; ++k) {
        long best = 0;
        double best_mag = -1.0;
        for (long i = 0; i < n; ++i) {
            const double mag = std::abs(basis.eigenvectors(i, k));
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (basis.eigenvectors(best, k) < 0) basis.eigenvectors.col(k) = -basis.eigenvectors.col(k);
    }
    return basis;
}

BasisDiagnostics verify_basis(const GraphSpectralBasis& basis, const LaplacianMatrix& L) {
    const long n = L.m.rows();
    if (basis.eigenvectors.rows() != n || basis.eigenvectors.cols() != n ||
        basis.eigenvalues.size() != n)
        throw ArgumentError("verify_basis: dimension mismatch");

    BasisDiagnostics d;
    if (n == 0) {
        d.ok = true;
        return d;
    }

    const Eigen::MatrixXd gram = basis.eigenvectors.transpose() * basis.eigenvectors;
    d.orthonormality_defect =
        (gram - Eigen::MatrixXd::Identity(n, n)).array().abs().maxCoeff();

    for (long k = 0; k < n; ++k) {
        const double r =
            (L.m * basis.eigenvectors.col(k) - basis.eigenvalues(k) * basis.eigenvectors.col(k))
                .norm();
        if (r > d.max_residual) d.max_residual = r;
    }

    for (long k = 0; k < n; ++k)
        if (basis.eigenvalues(k) < kZeroEigTol) ++d.zero_eigenvalue_count;

    for (long k = 1; k < n; ++k)
        if (basis.eigenvalues(k) < basis.eigenvalues(k - 1)) d.ascending = false;

    const double lam_max = basis.eigenvalues(n - 1);
    d.ok = d.ascending && d.orthonormality_defect <= 1e-8 &&
           d.max_residual <= 1e-8 * std::max(1.0, lam_max) &&
           basis.eigenvalues(0) >= -1e-8;
    return d;
}

}  // namespace wxc
