#include "quatloc/qmat.hpp"

#include <cmath>
#include <stdexcept>

#include "quatloc/cdense.hpp"
#include "quatloc/spectra.hpp"

namespace quatloc {

ComplexMatrix ComplexMatrix::identity(int m_) {
    ComplexMatrix r(m_);
    for (int i = 0; i < m_; ++i) r.at(i, i) = 1.0;
    return r;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : entries) s += std::norm(v);
    return std::sqrt(s);
}

QMatrix QMatrix::identity(int n) {
    QMatrix r(n);
    for (int i = 0; i < n; ++i) r.at(i, i) = Quaternion::real(1.0);
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QMatrix product: dimension mismatch");
    const int n = a.size();
    QMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Quaternion s;
            for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QMatrix sum: dimension mismatch");
    QMatrix c(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QMatrix difference: dimension mismatch");
    QMatrix c(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

QMatrix transpose(const QMatrix& a) {
    QMatrix c(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) c.at(i, j) = a.at(j, i);
    return c;
}

QMatrix conj(const QMatrix& a) {
    QMatrix c(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) c.at(i, j) = conj(a.at(i, j));
    return c;
}

QMatrix conj_transpose(const QMatrix& a) { return conj(transpose(a)); }

double dist_inf(const QMatrix& a, const QMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dist_inf: dimension mismatch");
    double d = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) d = std::max(d, dist_inf(a.at(i, j), b.at(i, j)));
    return d;
}

ComplexMatrix complex_adjoint(const QMatrix& a) {
    const int n = a.size();
    ComplexMatrix m(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Quaternion& q = a.at(i, j);
            const std::complex<double> a1(q.w, q.x);
            const std::complex<double> a2(q.y, q.z);
            m.at(i, j) = a1;
            m.at(i, j + n) = a2;
            m.at(i + n, j) = -std::conj(a2);
            m.at(i + n, j + n) = std::conj(a1);
        }
    return m;
}

QMatrix from_complex_adjoint(const ComplexMatrix& m) {
    if (m.m % 2 != 0) throw std::invalid_argument("from_complex_adjoint: odd dimension");
    const int n = m.m / 2;
    QMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::complex<double> a1 = m.at(i, j);
            const std::complex<double> a2 = m.at(i, j + n);
            a.at(i, j) = {a1.real(), a1.imag(), a2.real(), a2.imag()};
        }
    return a;
}

RowStats row_stats(const QMatrix& a, int i) {
    if (i < 0 || i >= a.size()) throw std::invalid_argument("row_stats: index out of range");
    RowStats s{0.0, 0.0, 0.0, 0.0};
    for (int j = 0; j < a.size(); ++j) {
        if (j == i) continue;
        s.r += norm(a.at(i, j));
        s.c += norm(a.at(j, i));
    }
    const double d = norm(a.at(i, i));
    s.r_primed = s.r + d;
    s.c_primed = s.c + d;
    return s;
}

double holder_norm(const QMatrix& a, int i, double p) {
    if (i < 0 || i >= a.size()) throw std::invalid_argument("holder_norm: index out of range");
    if (!(p > 1.0)) throw std::invalid_argument("holder_norm: p must be > 1");
    double s = 0.0;
    for (int j = 0; j < a.size(); ++j)
        if (j != i) s += std::pow(norm(a.at(i, j)), p);
    return std::pow(s, 1.0 / p);
}

QMatrix scale_similarity(const QMatrix& a, const std::vector<double>& weights) {
    if (static_cast<int>(weights.size()) != a.size())
        throw std::invalid_argument("scale_similarity: weight count mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("scale_similarity: weights must be positive");
    QMatrix c(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) c.at(i, j) = a.at(i, j) * (weights[j] / weights[i]);
    return c;
}

QMatrix inverse(const QMatrix& a) {
    if (!is_invertible(a)) throw std::domain_error("QMatrix inverse: singular matrix");
    return from_complex_adjoint(cdense::invert(complex_adjoint(a)));
}

QMatrix power(const QMatrix& a, long t) {
    if (t == 0) throw std::invalid_argument("power: exponent must be nonzero");
    QMatrix base = t > 0 ? a : inverse(a);
    long e = t > 0 ? t : -t;
    if (e < 8) {
        QMatrix r = base;
        for (long s = 1; s < e; ++s) r = r * base;
        return r;
    }
    QMatrix r = QMatrix::identity(a.size());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace quatloc
