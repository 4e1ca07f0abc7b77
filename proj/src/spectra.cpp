#include "quatloc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quatloc/cdense.hpp"

namespace quatloc {

using cd = std::complex<double>;

std::vector<cd> complex_eigenvalues(const ComplexMatrix& m) {
    if (m.m > 256) throw std::invalid_argument("complex_eigenvalues: dimension above 256");
    return cdense::eigenvalues(m);
}

SpectrumReport standard_eigenvalues(const QMatrix& a) {
    const ComplexMatrix psi = complex_adjoint(a);
    SpectrumReport rep;
    rep.all_adjoint = cdense::eigenvalues(psi);

    // Pair each eigenvalue with the nearest conjugate partner, keep the
    // representative with the larger imaginary part; exactly n survive.
    const int total = static_cast<int>(rep.all_adjoint.size());
    std::vector<bool> used(total, false);
    double worst_pairing = 0.0;
    for (int i = 0; i < total; ++i) {
        if (used[i]) continue;
        used[i] = true;
        const cd want = std::conj(rep.all_adjoint[i]);
        int best = -1;
        double bestd = std::numeric_limits<double>::infinity();
        for (int j = 0; j < total; ++j) {
            if (used[j]) continue;
            const double d = std::abs(rep.all_adjoint[j] - want);
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        cd rep_val = rep.all_adjoint[i];
        if (best >= 0) {
            used[best] = true;
            worst_pairing = std::max(worst_pairing, bestd);
            if (rep.all_adjoint[best].imag() > rep_val.imag()) rep_val = rep.all_adjoint[best];
        }
        rep.standard.push_back(rep_val);
    }
    std::sort(rep.standard.begin(), rep.standard.end(), [](cd x, cd y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    rep.residual_tol = std::max(1e-9, worst_pairing);
    return rep;
}

bool is_invertible(const QMatrix& a) {
    const ComplexMatrix psi = complex_adjoint(a);
    const std::vector<cd> ev = cdense::eigenvalues(psi);
    double lo = std::numeric_limits<double>::infinity();
    for (const cd& v : ev) lo = std::min(lo, std::abs(v));
    return lo > 1e-10 * psi.frobenius_norm();
}

double left_eigen_residual(const QMatrix& a, const Quaternion& lambda) {
    QMatrix b = a;
    for (int i = 0; i < b.size(); ++i) b.at(i, i) -= lambda;
    const double smin = cdense::singular_extremes(complex_adjoint(b)).smallest;
    const double den = cdense::singular_extremes(complex_adjoint(a)).largest + norm(lambda);
    if (den == 0.0) return smin;
    return smin / den;
}

std::vector<Quaternion> right_eigenvector(const QMatrix& a, cd lambda) {
    const int n = a.size();
    const std::vector<cd> y = cdense::inverse_iteration(complex_adjoint(a), lambda);
    // psi_x = [x1; -conj(x2)], so x1 = y_head, x2 = -conj(y_tail)
    std::vector<Quaternion> x(n);
    for (int i = 0; i < n; ++i) {
        const cd x1 = y[i];
        const cd x2 = -std::conj(y[n + i]);
        x[i] = {x1.real(), x1.imag(), x2.real(), x2.imag()};
    }
    return x;
}

double spectral_abscissa(const QMatrix& a) {
    const SpectrumReport rep = standard_eigenvalues(a);
    double s = -std::numeric_limits<double>::infinity();
    for (const cd& v : rep.standard) s = std::max(s, v.real());
    return s;
}

}  // namespace quatloc
