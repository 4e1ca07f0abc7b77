#pragma once

#include <complex>
#include <vector>

#include "quatloc/qmat.hpp"

namespace quatloc {

/// Spectrum of a quaternionic matrix seen through its complex adjoint.
/// `standard` holds the n standard eigenvalues (one representative per
/// conjugate pair, imaginary part >= -residual_tol); `all_adjoint` the full
/// 2n eigenvalue list of Psi_A.
struct SpectrumReport {
    std::vector<std::complex<double>> standard;
    std::vector<std::complex<double>> all_adjoint;
    double residual_tol = 0.0;
};

/// All m eigenvalues of a dense complex matrix (m <= 256), sorted by
/// (re, im). Non-convergence raises NumericError.
std::vector<std::complex<double>> complex_eigenvalues(const ComplexMatrix& m);

SpectrumReport standard_eigenvalues(const QMatrix& a);

/// det(Psi_A) != 0, tested scale-relative: min |eig(Psi_A)| > 1e-10 * ||Psi_A||_F.
bool is_invertible(const QMatrix& a);

/// Smallest singular value of Psi_{A - lambda I}, normalized by
/// sigma_max(Psi_A) + |lambda|. Vanishes exactly on left eigenvalues.
double left_eigen_residual(const QMatrix& a, const Quaternion& lambda);

/// Right eigenvector of A for a complex eigenvalue of Psi_A, recovered by
/// inverse iteration and mapped back through psi. Satisfies A x = x lambda.
std::vector<Quaternion> right_eigenvector(const QMatrix& a, std::complex<double> lambda);

/// max Re over the standard eigenvalues (the spectral abscissa).
double spectral_abscissa(const QMatrix& a);

}  // namespace quatloc
