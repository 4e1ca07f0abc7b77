#include "quatloc/qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quatloc/spectra.hpp"

namespace quatloc {

QPolynomial::QPolynomial(Side side, std::vector<Quaternion> coeffs)
    : side_(side), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw std::invalid_argument("QPolynomial: degree must be >= 1");
    if (coeffs_.back() != Quaternion::real(1.0))
        throw std::invalid_argument("QPolynomial: leading coefficient must be exactly 1");
}

Quaternion eval(const QPolynomial& p, const Quaternion& z) {
    Quaternion acc;
    Quaternion zp = Quaternion::real(1.0);
    for (int j = 0; j <= p.degree(); ++j) {
        acc += p.side() == Side::left ? p.coeff(j) * zp : zp * p.coeff(j);
        if (j < p.degree()) zp = zp * z;
    }
    return acc;
}

QMatrix companion(const QPolynomial& p) {
    const int m = p.degree();
    QMatrix c(m);
    for (int i = 0; i + 1 < m; ++i) c.at(i, i + 1) = Quaternion::real(1.0);
    for (int j = 0; j < m; ++j) c.at(m - 1, j) = -p.coeff(j);
    return p.side() == Side::left ? c : transpose(c);
}

QPolynomial reversal(const QPolynomial& p) {
    const Quaternion q0 = p.coeff(0);
    if (norm_sq(q0) == 0.0) throw std::domain_error("reversal undefined, zero constant term");
    const Quaternion q0inv = inverse(q0);
    const int m = p.degree();
    std::vector<Quaternion> cs(static_cast<size_t>(m) + 1);
    for (int j = 0; j < m; ++j)
        cs[j] = p.side() == Side::left ? q0inv * p.coeff(m - j) : p.coeff(m - j) * q0inv;
    cs[m] = Quaternion::real(1.0);
    return {p.side(), std::move(cs)};
}

QPolynomial tilde(const QPolynomial& p) {
    std::vector<Quaternion> cs(p.coeffs().size());
    for (size_t j = 0; j < cs.size(); ++j) cs[j] = conj(p.coeffs()[j]);
    return {p.side() == Side::left ? Side::right : Side::left, std::move(cs)};
}

std::vector<double> RootSet::moduli() const {
    std::vector<double> out;
    out.reserve(isolated.size() + spherical.size());
    for (const Quaternion& z : isolated) out.push_back(norm(z));
    for (const SphericalClass& s : spherical) out.push_back(std::hypot(s.re, s.im_norm));
    return out;
}

RootSet roots(const QPolynomial& p) {
    const int m = p.degree();
    double coeff_norm = 0.0;
    for (const Quaternion& q : p.coeffs()) coeff_norm += norm(q);

    const SpectrumReport sr = standard_eigenvalues(companion(p));

    // One candidate class per (re, |im|) cluster of the standard eigenvalues.
    std::vector<std::pair<double, double>> classes;
    for (const auto& ev : sr.standard) {
        const double a = ev.real();
        const double b = std::max(ev.imag(), 0.0);
        bool dup = false;
        for (const auto& [a2, b2] : classes) {
            const double ctol = 1e-6 * (1.0 + std::abs(a2) + b2);
            if (std::abs(a - a2) <= ctol && std::abs(b - b2) <= ctol) {
                dup = true;
                break;
            }
        }
        if (!dup) classes.emplace_back(a, b);
    }

    RootSet out;
    out.residual_tol = 1e-8 * std::max(1.0, coeff_norm);
    const double sph_tol = 1e-8 * coeff_norm;

    auto accept_isolated = [&](const Quaternion& z) {
        const double res = norm(eval(p, z));
        if (res <= out.residual_tol * std::pow(1.0 + norm(z), m)) out.isolated.push_back(z);
    };

    for (const auto& [a, b] : classes) {
        if (b <= 1e-9 * (1.0 + std::abs(a))) {
            accept_isolated(Quaternion::real(a));
            continue;
        }
        // On the class {a + b*u, u^2 = -1}: z^j = A_j + B_j u with real A, B.
        std::vector<double> ca(static_cast<size_t>(m) + 1), cb(static_cast<size_t>(m) + 1);
        ca[0] = 1.0;
        cb[0] = 0.0;
        for (int j = 0; j < m; ++j) {
            ca[j + 1] = a * ca[j] - b * cb[j];
            cb[j + 1] = b * ca[j] + a * cb[j];
        }
        Quaternion c, d;
        for (int j = 0; j <= m; ++j) {
            c += p.coeff(j) * ca[j];
            d += p.coeff(j) * cb[j];
        }
        if (norm(c) <= sph_tol && norm(d) <= sph_tol) {
            out.spherical.push_back({a, b});
            continue;
        }
        if (norm(d) <= sph_tol) continue;  // constant nonzero over the class
        const Quaternion u =
            p.side() == Side::left ? -(inverse(d) * c) : -(c * inverse(d));
        if (std::abs(re(u)) > 1e-6 || std::abs(norm(u) - 1.0) > 1e-6) continue;
        const double un = im_norm(u);
        if (un == 0.0) continue;
        const Quaternion unit{0.0, u.x / un, u.y / un, u.z / un};
        accept_isolated(Quaternion{a, 0.0, 0.0, 0.0} + b * unit);
    }

    std::sort(out.isolated.begin(), out.isolated.end(), [](const Quaternion& x, const Quaternion& y) {
        const double nx = norm_sq(x), ny = norm_sq(y);
        if (nx != ny) return nx > ny;
        if (x.w != y.w) return x.w < y.w;
        if (x.x != y.x) return x.x < y.x;
        if (x.y != y.y) return x.y < y.y;
        return x.z < y.z;
    });
    std::sort(out.spherical.begin(), out.spherical.end(),
              [](const SphericalClass& x, const SphericalClass& y) {
                  const double nx = x.re * x.re + x.im_norm * x.im_norm;
                  const double ny = y.re * y.re + y.im_norm * y.im_norm;
                  if (nx != ny) return nx > ny;
                  return x.re < y.re;
              });
    return out;
}

QMatrix companion_power_structured(const QPolynomial& p, long t) {
    if (t < 1) throw std::invalid_argument("companion_power_structured: t must be >= 1");
    const int m = p.degree();
    const bool left = p.side() == Side::left;

    // History of the moving row (Left) / column (Right) of successive powers.
    // Left: L^s = shift_right(L^{s-1}) + L^{s-1}[m-1] * L^1, products on the left.
    // Right: R^s = shift_down(R^{s-1}) + R^1 * R^{s-1}[m-1], products on the right.
    std::vector<std::vector<Quaternion>> hist;
    std::vector<Quaternion> first(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) first[j] = -p.coeff(j);
    hist.push_back(first);
    for (long s = 2; s <= t; ++s) {
        const std::vector<Quaternion>& prev = hist.back();
        std::vector<Quaternion> cur(static_cast<size_t>(m));
        const Quaternion tail = prev[static_cast<size_t>(m) - 1];
        for (int j = 0; j < m; ++j) {
            Quaternion v = left ? tail * first[j] : first[j] * tail;
            if (j > 0) v += prev[static_cast<size_t>(j) - 1];
            cur[j] = v;
        }
        hist.push_back(std::move(cur));
    }

    QMatrix out(m);
    if (t < m) {
        // leading block [0 | I] (Left) or [0 / I] transposed layout (Right)
        for (int i = 0; i + t < m; ++i) out.at(i, i + static_cast<int>(t)) = Quaternion::real(1.0);
        for (long s = 1; s <= t; ++s) {
            const auto& row = hist[static_cast<size_t>(s) - 1];
            const int i = m - static_cast<int>(t) + static_cast<int>(s) - 1;
            for (int j = 0; j < m; ++j) out.at(i, j) = row[j];
        }
    } else {
        for (int i = 0; i < m; ++i) {
            const auto& row = hist[static_cast<size_t>(t) - m + i];
            for (int j = 0; j < m; ++j) out.at(i, j) = row[j];
        }
    }
    return left ? out : transpose(out);
}

std::string bound_method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::ostrowski: return "ostrowski";
        case BoundMethod::co1: return "co1";
        case BoundMethod::co2: return "co2";
        case BoundMethod::scaled: return "scaled";
        case BoundMethod::cs1: return "cs1";
        case BoundMethod::cs2: return "cs2";
        case BoundMethod::kojima: return "kojima";
        case BoundMethod::power: return "power";
        case BoundMethod::pc1a: return "pc1a";
        case BoundMethod::pc1b: return "pc1b";
        case BoundMethod::pc2a: return "pc2a";
        case BoundMethod::pc2b: return "pc2b";
    }
    return "?";
}

std::optional<BoundMethod> bound_method_from_name(const std::string& name) {
    for (BoundMethod m :
         {BoundMethod::ostrowski, BoundMethod::co1, BoundMethod::co2, BoundMethod::scaled,
          BoundMethod::cs1, BoundMethod::cs2, BoundMethod::kojima, BoundMethod::power,
          BoundMethod::pc1a, BoundMethod::pc1b, BoundMethod::pc2a, BoundMethod::pc2b})
        if (bound_method_name(m) == name) return m;
    return std::nullopt;
}

namespace {

// max_i r_i'(C)^g c_i'(C)^(1-g) over all rows of a companion-shaped matrix.
double interp_bound(const QMatrix& c, double gamma) {
    double best = 0.0;
    for (int i = 0; i < c.size(); ++i) {
        const RowStats s = row_stats(c, i);
        best = std::max(best, std::pow(s.r_primed, gamma) * std::pow(s.c_primed, 1.0 - gamma));
    }
    return best;
}

// W C W^-1 with W = diag(w): entries w_i c_ij / w_j.
QMatrix conjugate_by_weights(const QMatrix& c, const std::vector<double>& w) {
    std::vector<double> winv(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] > 0.0)) throw std::invalid_argument("scaled bound: weights must be positive");
        winv[i] = 1.0 / w[i];
    }
    return scale_similarity(c, winv);
}

void require_gamma01(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must lie in [0, 1]");
}

}  // namespace

BoundReport zero_bounds(const QPolynomial& p, BoundMethod method, const BoundParams& params) {
    BoundReport rep;
    rep.method = method;
    rep.params = params;
    const bool q0_zero = norm_sq(p.coeff(0)) == 0.0;

    // The coefficient-stat methods are closed forms in the moduli |q_j|, so
    // they must not depend on the side. A right-sided polynomial is routed
    // through its conjugate, a left polynomial with identical moduli whose
    // zeros have the same absolute values.
    const auto left_form = [&]() -> QPolynomial {
        return p.side() == Side::left ? p : tilde(p);
    };

    switch (method) {
        case BoundMethod::ostrowski:
        case BoundMethod::co1:
        case BoundMethod::co2: {
            double gamma = params.gamma;
            if (method == BoundMethod::co1) gamma = 0.0;
            if (method == BoundMethod::co2) gamma = 1.0;
            require_gamma01(gamma);
            rep.params.gamma = gamma;
            const QPolynomial q = left_form();
            rep.upper = interp_bound(companion(q), gamma);
            if (q0_zero) {
                rep.lower = 0.0;
                rep.lower_defined = false;
            } else {
                rep.lower = 1.0 / interp_bound(companion(reversal(q)), gamma);
            }
            return rep;
        }
        case BoundMethod::scaled:
        case BoundMethod::cs1:
        case BoundMethod::cs2:
        case BoundMethod::kojima: {
            double gamma = params.gamma;
            std::vector<double> w = params.weights;
            if (method == BoundMethod::cs1) gamma = 0.0;
            if (method == BoundMethod::cs2) gamma = 1.0;
            if (method == BoundMethod::kojima) {
                gamma = 0.0;
                w.clear();
                for (int j = 1; j < p.degree(); ++j) {
                    const double wj = norm(p.coeff(j));
                    if (wj == 0.0)
                        throw std::domain_error("kojima bound undefined: coefficient " +
                                                std::to_string(j) + " is zero");
                    w.push_back(wj);
                }
                w.push_back(1.0);
            }
            require_gamma01(gamma);
            if (static_cast<int>(w.size()) != p.degree())
                throw std::invalid_argument("scaled bound: need one weight per companion row");
            rep.params.gamma = gamma;
            rep.params.weights = w;
            const QPolynomial q = left_form();
            rep.upper = interp_bound(conjugate_by_weights(companion(q), w), gamma);
            if (q0_zero) {
                rep.lower = 0.0;
                rep.lower_defined = false;
            } else {
                rep.lower =
                    1.0 / interp_bound(conjugate_by_weights(companion(reversal(q)), w), gamma);
            }
            return rep;
        }
        case BoundMethod::power: {
            if (params.t < 2) throw std::invalid_argument("power bound requires t >= 2");
            require_gamma01(params.gamma);
            const QPolynomial base =
                params.variant == PowerVariant::plain ? p : tilde(p);
            const double it = 1.0 / static_cast<double>(params.t);
            rep.upper =
                std::pow(interp_bound(companion_power_structured(base, params.t), params.gamma), it);
            if (q0_zero) {
                rep.lower = 0.0;
                rep.lower_defined = false;
            } else {
                rep.lower = 1.0 / std::pow(interp_bound(companion_power_structured(
                                                            reversal(base), params.t),
                                                        params.gamma),
                                           it);
            }
            return rep;
        }
        case BoundMethod::pc1a:
        case BoundMethod::pc1b:
        case BoundMethod::pc2a:
        case BoundMethod::pc2b: {
            const bool wants_left = method == BoundMethod::pc1a || method == BoundMethod::pc1b;
            if (wants_left != (p.side() == Side::left))
                throw std::invalid_argument("bound " + bound_method_name(method) +
                                            " requires a " + (wants_left ? "left" : "right") +
                                            "-sided polynomial");
            BoundParams pw;
            pw.t = 2;
            pw.gamma = 1.0;
            pw.variant = (method == BoundMethod::pc1b || method == BoundMethod::pc2b)
                             ? PowerVariant::conjugate
                             : PowerVariant::plain;
            BoundReport inner = zero_bounds(p, BoundMethod::power, pw);
            rep.params = pw;
            rep.lower = inner.lower;
            rep.upper = inner.upper;
            rep.lower_defined = inner.lower_defined;
            return rep;
        }
    }
    throw std::invalid_argument("unknown bound method");
}

OpferComparison opfer_comparison(const QPolynomial& p) {
    const int m = p.degree();
    double alpha = norm(p.coeff(0));
    for (int i = 1; i < m; ++i) alpha = std::max(alpha, 1.0 + norm(p.coeff(i)));
    double sum = 0.0;
    for (int i = 0; i < m; ++i) sum += norm(p.coeff(i));
    const double t = std::max(1.0, sum);
    return {alpha, t, alpha <= t};
}

}  // namespace quatloc
