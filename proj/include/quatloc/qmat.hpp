#pragma once

#include <complex>
#include <vector>

#include "quatloc/quat.hpp"

namespace quatloc {

/// Dense square complex matrix, row-major. Shared between the adjoint
/// embedding and the eigensolver.
struct ComplexMatrix {
    int m = 0;
    std::vector<std::complex<double>> entries;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int m_) : m(m_), entries(static_cast<size_t>(m_) * m_) {}

    std::complex<double>& at(int i, int j) { return entries[static_cast<size_t>(i) * m + j]; }
    const std::complex<double>& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * m + j];
    }

    static ComplexMatrix identity(int m_);
    double frobenius_norm() const;
};

/// Dense n x n quaternionic matrix, row-major, immutable by convention after
/// construction. Entry products always accumulate row-into-column in the
/// written order; factors are never reordered.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {
        if (n < 1) throw std::invalid_argument("QMatrix: dimension must be >= 1");
    }

    static QMatrix identity(int n);

    int size() const { return n_; }

    Quaternion& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const Quaternion& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const QMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<Quaternion> e_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);

QMatrix transpose(const QMatrix& a);
QMatrix conj(const QMatrix& a);
QMatrix conj_transpose(const QMatrix& a);

/// Max entrywise componentwise distance.
double dist_inf(const QMatrix& a, const QMatrix& b);

/// A = A1 + A2*j with complex A1, A2 embeds as the 2n x 2n complex matrix
/// [[A1, A2], [-conj(A2), conj(A1)]]; an algebra homomorphism.
ComplexMatrix complex_adjoint(const QMatrix& a);

/// Recover the quaternionic matrix from a 2n x 2n adjoint-shaped complex
/// matrix (top blocks are read; callers guarantee the shape).
QMatrix from_complex_adjoint(const ComplexMatrix& m);

struct RowStats {
    double r;         // deleted absolute row sum
    double c;         // deleted absolute column sum
    double r_primed;  // r + |a_ii|
    double c_primed;  // c + |a_ii|
};

/// Row/column modulus sums for row/column i (0-based).
RowStats row_stats(const QMatrix& a, int i);

/// Deleted-row Hoelder norm (sum_{j != i} |a_ij|^p)^(1/p), p in (1, inf).
double holder_norm(const QMatrix& a, int i, double p);

/// W^-1 A W for W = diag(weights): entry (i,j) becomes a_ij * w_j / w_i.
/// Left eigenvalues are preserved.
QMatrix scale_similarity(const QMatrix& a, const std::vector<double>& weights);

/// Inverse computed through the complex adjoint (invert Psi_A, map back).
QMatrix inverse(const QMatrix& a);

/// A^t for nonzero integer t. Sequential left-associated products below t=8,
/// binary exponentiation from t=8 up; negative t inverts first.
QMatrix power(const QMatrix& a, long t);

}  // namespace quatloc
