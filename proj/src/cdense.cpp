#include "quatloc/cdense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace quatloc {
namespace cdense {

namespace {

double max_abs(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.entries) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace

LU lu_factor(ComplexMatrix m) {
    const int n = m.m;
    LU f;
    f.piv.resize(n);
    const double scale = max_abs(m);
    const double tiny = scale > 0.0 ? scale * std::numeric_limits<double>::epsilon()
                                    : std::numeric_limits<double>::min();
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(m.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(m.at(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        f.piv[k] = p;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            f.sign = -f.sign;
        }
        if (std::abs(m.at(k, k)) == 0.0) {
            m.at(k, k) = tiny;
            f.patched = true;
        }
        for (int i = k + 1; i < n; ++i) {
            m.at(i, k) /= m.at(k, k);
            const cd lik = m.at(i, k);
            if (lik == cd(0.0)) continue;
            for (int j = k + 1; j < n; ++j) m.at(i, j) -= lik * m.at(k, j);
        }
    }
    f.lu = std::move(m);
    return f;
}

std::vector<cd> lu_solve(const LU& f, std::vector<cd> rhs) {
    const int n = f.lu.m;
    for (int k = 0; k < n; ++k)
        if (f.piv[k] != k) std::swap(rhs[k], rhs[f.piv[k]]);
    for (int i = 1; i < n; ++i) {
        cd s = rhs[i];
        for (int j = 0; j < i; ++j) s -= f.lu.at(i, j) * rhs[j];
        rhs[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        cd s = rhs[i];
        for (int j = i + 1; j < n; ++j) s -= f.lu.at(i, j) * rhs[j];
        rhs[i] = s / f.lu.at(i, i);
    }
    return rhs;
}

cd lu_determinant(const LU& f) {
    if (f.patched) return 0.0;
    cd d = static_cast<double>(f.sign);
    for (int i = 0; i < f.lu.m; ++i) d *= f.lu.at(i, i);
    return d;
}

ComplexMatrix invert(const ComplexMatrix& m) {
    const int n = m.m;
    const LU f = lu_factor(m);
    ComplexMatrix inv(n);
    std::vector<cd> e(n);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), cd(0.0));
        e[j] = 1.0;
        const std::vector<cd> col = lu_solve(f, std::move(e));
        for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
        e.assign(n, cd(0.0));
    }
    return inv;
}

namespace {

// Parlett-Reinsch balancing: diagonal similarity with powers of 2 until row
// and column norms roughly agree. Eigenvalues are unchanged.
void balance(ComplexMatrix& h) {
    const int n = h.m;
    const double radix = 2.0;
    const double sq = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                r += std::abs(h.at(i, j));
                c += std::abs(h.at(j, i));
            }
            if (r == 0.0 || c == 0.0) continue;
            const double s = r + c;
            double f = 1.0;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= sq;
            }
            g = r * radix;
            while (c >= g) {
                f /= radix;
                c /= sq;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                const double gf = 1.0 / f;
                for (int j = 0; j < n; ++j) h.at(i, j) *= gf;
                for (int j = 0; j < n; ++j) h.at(j, i) *= f;
            }
        }
    }
}

// Householder similarity reduction to upper Hessenberg form.
void hessenberg(ComplexMatrix& h) {
    const int n = h.m;
    std::vector<cd> v(n);
    for (int k = 0; k + 2 < n; ++k) {
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += std::norm(h.at(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;
        const cd a0 = h.at(k + 1, k);
        const double a0abs = std::abs(a0);
        const cd phase = a0abs > 0.0 ? a0 / a0abs : cd(1.0);
        const cd alpha = -phase * colnorm;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = h.at(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        const double tau = 2.0 / vnorm2;
        // left: h -= tau v (v^H h)
        for (int j = k; j < n; ++j) {
            cd s = 0.0;
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * h.at(i, j);
            s *= tau;
            for (int i = k + 1; i < n; ++i) h.at(i, j) -= v[i] * s;
        }
        // right: h -= tau (h v) v^H
        for (int i = 0; i < n; ++i) {
            cd s = 0.0;
            for (int j = k + 1; j < n; ++j) s += h.at(i, j) * v[j];
            s *= tau;
            for (int j = k + 1; j < n; ++j) h.at(i, j) -= s * std::conj(v[j]);
        }
        h.at(k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i) h.at(i, k) = 0.0;
    }
}

struct Givens {
    double c;
    cd s;
};

// Rotation [[c, s], [-conj(s), c]] taking (a, b) to (r, 0).
Givens make_givens(cd a, cd b) {
    const double aa = std::abs(a), bb = std::abs(b);
    const double r = std::hypot(aa, bb);
    if (r == 0.0) return {1.0, cd(0.0)};
    if (aa == 0.0) return {0.0, std::conj(b) / bb};
    const cd phase = a / aa;
    return {aa / r, phase * std::conj(b) / r};
}

// Wilkinson shift: eigenvalue of the trailing 2x2 block closest to h_ee.
cd wilkinson_shift(const ComplexMatrix& h, int en) {
    const cd a = h.at(en - 1, en - 1), b = h.at(en - 1, en);
    const cd c = h.at(en, en - 1), d = h.at(en, en);
    const cd tr = a + d;
    const cd disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    const cd r1 = 0.5 * (tr + disc);
    const cd r2 = 0.5 * (tr - disc);
    return std::abs(r1 - d) < std::abs(r2 - d) ? r1 : r2;
}

}  // namespace

std::vector<cd> eigenvalues(ComplexMatrix m) {
    const int n = m.m;
    std::vector<cd> w(n);
    if (n == 0) return w;
    if (n == 1) {
        w[0] = m.at(0, 0);
        return w;
    }
    balance(m);
    hessenberg(m);
    ComplexMatrix& h = m;

    const double eps = std::numeric_limits<double>::epsilon();
    // Infinity norm of the Hessenberg form. Dropping a subdiagonal entry no
    // larger than eps * ||H|| is a backward-stable perturbation, which keeps
    // the deflation test from stalling on the rounding-noise floor.
    double hnorm = 0.0;
    for (int i = 0; i < n; ++i) {
        double rsum = 0.0;
        for (int j = 0; j < n; ++j) rsum += std::abs(h.at(i, j));
        hnorm = std::max(hnorm, rsum);
    }
    if (hnorm == 0.0) hnorm = 1.0;

    const long cap = 60L * n;
    long total = 0;
    int en = n - 1;
    std::vector<double> rc(n);
    std::vector<cd> rs(n);
    while (en >= 0) {
        int its = 0;
        for (;;) {
            int l = 0;
            for (int i = en; i >= 1; --i) {
                const double s = std::abs(h.at(i - 1, i - 1)) + std::abs(h.at(i, i));
                if (std::abs(h.at(i, i - 1)) <= eps * std::max(s, n * hnorm)) {
                    h.at(i, i - 1) = 0.0;
                    l = i;
                    break;
                }
            }
            if (l == en) {
                w[en] = h.at(en, en);
                --en;
                break;
            }
            if (++total > cap) {
                throw NumericError("eigenvalue iteration failed to converge on a " +
                                   std::to_string(n) + "x" + std::to_string(n) + " matrix");
            }
            cd shift;
            if (its == 10 || its == 20) {
                // exceptional shift to break cycling
                double s = std::abs(h.at(en, en - 1));
                if (en - 1 > l) s += std::abs(h.at(en - 1, en - 2));
                shift = s;
            } else {
                shift = wilkinson_shift(h, en);
            }
            for (int i = l; i <= en; ++i) h.at(i, i) -= shift;

            for (int k = l; k < en; ++k) {
                const Givens g = make_givens(h.at(k, k), h.at(k + 1, k));
                rc[k] = g.c;
                rs[k] = g.s;
                for (int j = k; j <= en; ++j) {
                    const cd t1 = h.at(k, j), t2 = h.at(k + 1, j);
                    h.at(k, j) = g.c * t1 + g.s * t2;
                    h.at(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
                }
                h.at(k + 1, k) = 0.0;
            }
            for (int k = l; k < en; ++k) {
                const double c = rc[k];
                const cd s = rs[k];
                const int top = std::min(k + 1, en);
                for (int i = l; i <= top; ++i) {
                    const cd t1 = h.at(i, k), t2 = h.at(i, k + 1);
                    h.at(i, k) = c * t1 + std::conj(s) * t2;
                    h.at(i, k + 1) = -s * t1 + c * t2;
                }
            }
            for (int i = l; i <= en; ++i) h.at(i, i) += shift;
            ++its;
        }
    }
    std::sort(w.begin(), w.end(), [](cd a, cd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return w;
}

SingularExtremes singular_extremes(const ComplexMatrix& m) {
    const int n = m.m;
    ComplexMatrix d(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            d.at(i, n + j) = std::conj(m.at(j, i));
            d.at(n + i, j) = m.at(i, j);
        }
    const std::vector<cd> ev = eigenvalues(std::move(d));
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const cd& v : ev) {
        const double a = std::abs(v);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    return {lo, hi};
}

std::vector<cd> inverse_iteration(const ComplexMatrix& m, cd lambda) {
    const int n = m.m;
    ComplexMatrix b = m;
    for (int i = 0; i < n; ++i) b.at(i, i) -= lambda;
    const LU f = lu_factor(std::move(b));
    std::vector<cd> x(n);
    for (int i = 0; i < n; ++i) x[i] = cd(1.0, 0.3 + 0.1 * i);  // deterministic start
    for (int pass = 0; pass < 3; ++pass) {
        x = lu_solve(f, std::move(x));
        double nn = 0.0;
        for (const cd& v : x) nn += std::norm(v);
        nn = std::sqrt(nn);
        if (nn == 0.0) break;
        for (cd& v : x) v /= nn;
    }
    return x;
}

}  // namespace cdense
}  // namespace quatloc
