#pragma once

// Dense complex kernels behind the spectra module: LU with partial pivoting,
// Parlett-Reinsch balancing, Householder reduction to upper Hessenberg, and
// Wilkinson-shifted QR iteration with deflation.

#include <complex>
#include <stdexcept>
#include <vector>

#include "quatloc/qmat.hpp"

namespace quatloc {

/// Thrown when an iterative kernel fails to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace cdense {

using cd = std::complex<double>;

/// In-place LU factorization with partial pivoting. Returns the permutation
/// sign, 0 if numerically singular pivots were patched (see `patched`).
struct LU {
    ComplexMatrix lu;
    std::vector<int> piv;
    int sign = 1;
    bool patched = false;  // a zero pivot was replaced by a tiny value
};

LU lu_factor(ComplexMatrix m);
std::vector<cd> lu_solve(const LU& f, std::vector<cd> rhs);
cd lu_determinant(const LU& f);
ComplexMatrix invert(const ComplexMatrix& m);

/// All eigenvalues of a general complex dense matrix. Balancing +
/// Householder Hessenberg + shifted QR; iteration cap 60*m, exceeded ->
/// NumericError. Result sorted by (re, im).
std::vector<cd> eigenvalues(ComplexMatrix m);

/// Largest / smallest singular value via the Hermitian dilation
/// [[0, M^H], [M, 0]] whose eigenvalues are +-sigma_i.
struct SingularExtremes {
    double smallest;
    double largest;
};
SingularExtremes singular_extremes(const ComplexMatrix& m);

/// One inverse-iteration eigenvector for (m - lambda I), with a refinement
/// step; normalized to unit 2-norm.
std::vector<cd> inverse_iteration(const ComplexMatrix& m, cd lambda);

}  // namespace cdense
}  // namespace quatloc
