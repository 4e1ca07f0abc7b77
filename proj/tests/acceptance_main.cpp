// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "quatloc/qpoly.hpp"
#include "quatloc/regions.hpp"
#include "quatloc/spectra.hpp"

using namespace quatloc;
using cd = std::complex<double>;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void expect_near(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol)) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s: got %.6f, want %.6f (tol %g)", what.c_str(), got,
                          want, tol);
            expect(false, buf);
        }
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool has_eigenvalue_near(const SpectrumReport& sp, cd want, double tol) {
    for (const cd& v : sp.standard)
        if (std::abs(v - want) <= tol) return true;
    return false;
}

// ---------------------------------------------------------------- criterion 1
Criterion criterion1() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    const QMatrix a = fixtures::real_diag_3x3();
    const Region balls = build_region(a, {RegionKind::ostrowski_right_real_diag, 0.25});
    c.expect_near(balls.parts[0].radius, 9.4533, 1e-3, "ball radius 1");
    c.expect_near(balls.parts[1].radius, 6.0894, 1e-3, "ball radius 2");
    c.expect_near(balls.parts[2].radius, 8.7389, 1e-3, "ball radius 3");
    const Region ovals = build_region(a, {RegionKind::brauer_right_real_diag, 0.25});
    c.expect_near(ovals.parts[0].radius, 57.5649, 1e-3, "oval bound (1,2)");
    c.expect_near(ovals.parts[2].radius, 53.2145, 1e-3, "oval bound (2,3)");
    c.expect_near(ovals.parts[1].radius, 82.6108, 1e-3, "oval bound (3,1)");
    const double elapsed = ms_since(t0);
    c.expect(elapsed < 1000.0, "runtime " + std::to_string(elapsed) + " ms >= 1 s");
    return c;
}

// ---------------------------------------------------------------- criterion 2
Criterion criterion2() {
    Criterion c;
    const QMatrix a = fixtures::nonreal_diag_triangular();
    const Region d = build_region(a, {RegionKind::holder_left, 1.0});
    c.expect(approx_equal(d.parts[0].center, {1, -2, 0, 0}, 0.0), "disc center 1");
    c.expect(approx_equal(d.parts[1].center, {0, -2, 0, 0}, 0.0), "disc center 2");
    c.expect(approx_equal(d.parts[2].center, {3, 1, 0, 0}, 0.0), "disc center 3");
    c.expect(d.parts[0].radius == 2.0, "disc radius 1 exact");
    c.expect(d.parts[1].radius == 1.0, "disc radius 2 exact");
    c.expect(d.parts[2].radius == 1.0, "disc radius 3 exact");

    const SpectrumReport sp = standard_eigenvalues(a);
    c.expect(has_eigenvalue_near(sp, {-0.0164, 2.0083}, 5e-3), "eigenvalue -0.0164+2.0083i");
    c.expect(has_eigenvalue_near(sp, {1, 2}, 5e-3), "eigenvalue 1+2i");
    c.expect(has_eigenvalue_near(sp, {3.0164, 1.0324}, 5e-3), "eigenvalue 3.0164+1.0324i");

    // the three escapees (the sixth value is the conjugate partner of the fifth)
    c.expect(!contains(d, {-0.0164, 2.0083, 0, 0}), "lambda1 outside");
    c.expect(!contains(d, {1, 2, 0, 0}), "lambda3 outside");
    c.expect(!contains(d, {3.0164, -1.0324, 0, 0}), "lambda6 outside");
    // and their partners sit inside
    c.expect(contains(d, {-0.0164, -2.0083, 0, 0}), "lambda2 inside");
    c.expect(contains(d, {1, -2, 0, 0}), "lambda4 inside");
    c.expect(contains(d, {3.0164, 1.0324, 0, 0}), "lambda5 inside");
    return c;
}

// ---------------------------------------------------------------- criterion 3
Criterion criterion3() {
    Criterion c;
    const QMatrix a = fixtures::stable_3x3();
    const Region r = build_region(a, {RegionKind::holder_left, 1.0});
    c.expect_near(r.parts[0].radius, 3.0, 1e-9, "radius 1");
    c.expect_near(r.parts[1].radius, std::sqrt(2.0) + std::sqrt(5.0), 1e-9, "radius 2");
    c.expect_near(r.parts[2].radius, 7.0, 1e-9, "radius 3");
    c.expect(stability_sufficient(a, 1.0, 2.0), "stability condition");
    const SpectrumReport sp = standard_eigenvalues(a);
    for (const cd& v : sp.standard)
        c.expect(v.real() < 0.0, "eigenvalue with nonnegative real part");
    return c;
}

// ---------------------------------------------------------------- criterion 4
Criterion criterion4() {
    Criterion c;
    const QMatrix a = fixtures::weighted_triangular();
    RegionSpec g{RegionKind::gersch_row, 1.0};
    g.weights = std::vector<double>{8, 4, 1};
    const Region balls = build_region(a, g);
    c.expect(balls.parts[0].radius == 0.875, "weighted radius 1 exact");
    c.expect(balls.parts[1].radius == 0.5, "weighted radius 2 exact");
    c.expect(balls.parts[2].radius == 0.0, "weighted radius 3 exact");

    RegionSpec k{RegionKind::brauer_left_ostrowski, 1.0};
    k.weights = std::vector<double>{6, 6, 1};
    const Region ovals = build_region(a, k);
    c.expect(ovals.parts[0].radius == 0.5, "weighted cassini bound exact");
    return c;
}

// ---------------------------------------------------------------- criterion 5
Criterion criterion5() {
    Criterion c;
    const QPolynomial p = fixtures::degree6(Side::left);
    const RootSet r = roots(p);
    c.expect(r.isolated.size() == 2 && r.spherical.size() == 2, "root multiplicity layout");
    std::vector<double> mods = r.moduli();
    std::sort(mods.begin(), mods.end());
    const double want[] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0)};
    for (int i = 0; i < 4; ++i)
        c.expect_near(mods[static_cast<size_t>(i)], want[i], 1e-3,
                      "root modulus " + std::to_string(i));
    bool sph3 = false, sph2 = false;
    for (const SphericalClass& s : r.spherical) {
        if (std::abs(s.re) < 1e-6 && std::abs(s.im_norm - std::sqrt(3.0)) < 1e-6) sph3 = true;
        if (std::abs(s.re) < 1e-6 && std::abs(s.im_norm - std::sqrt(2.0)) < 1e-6) sph2 = true;
    }
    c.expect(sph3, "spherical class at |im| sqrt(3)");
    c.expect(sph2, "spherical class at |im| sqrt(2)");

    const BoundReport c1 = zero_bounds(p, BoundMethod::co1);
    c.expect_near(c1.lower, 0.4142, 1e-3, "co1 lower");
    c.expect_near(c1.upper, 19.9737, 1e-3, "co1 upper");
    const BoundReport c2 = zero_bounds(p, BoundMethod::co2);
    c.expect_near(c2.lower, 0.2766, 1e-3, "co2 lower");
    c.expect_near(c2.upper, 60.9291, 1e-3, "co2 upper");
    const BoundReport os = zero_bounds(p, BoundMethod::ostrowski, {.gamma = 0.25});
    c.expect_near(os.lower, 0.3744, 1e-3, "ostrowski gamma=1/4 lower");
    c.expect_near(os.upper, 8.1415, 1e-3, "ostrowski gamma=1/4 upper");
    return c;
}

// ---------------------------------------------------------------- criterion 6
Criterion criterion6() {
    Criterion c;
    const QPolynomial pl = fixtures::noncommuting_cubic(Side::left);
    const QPolynomial pr = fixtures::noncommuting_cubic(Side::right);

    const QMatrix cl2 = companion_power_structured(pl, 2);
    const Quaternion want_l[3][3] = {
        {{}, {}, {1, 0, 0, 0}},
        {{0, -1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}},
        {{0, 1, -1, 0}, {1, -2, -1, 0}, {-1, 0, 1, -1}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c.expect(cl2.at(i, j) == want_l[i][j],
                     "left square entry (" + std::to_string(i) + "," + std::to_string(j) + ")");

    const QMatrix cr2 = companion_power_structured(pr, 2);
    const Quaternion want_r[3][3] = {
        {{}, {0, -1, -1, 0}, {0, -1, 1, 0}},
        {{}, {0, 0, 1, -1}, {1, 0, -1, 0}},
        {{1, 0, 0, 0}, {0, 0, 0, 1}, {-1, 0, 1, -1}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c.expect(cr2.at(i, j) == want_r[i][j],
                     "right square entry (" + std::to_string(i) + "," + std::to_string(j) + ")");

    const double uppers[4] = {zero_bounds(pl, BoundMethod::pc1a).upper,
                              zero_bounds(pl, BoundMethod::pc1b).upper,
                              zero_bounds(pr, BoundMethod::pc2a).upper,
                              zero_bounds(pr, BoundMethod::pc2b).upper};
    const double lowers[4] = {zero_bounds(pl, BoundMethod::pc1a).lower,
                              zero_bounds(pl, BoundMethod::pc1b).lower,
                              zero_bounds(pr, BoundMethod::pc2a).lower,
                              zero_bounds(pr, BoundMethod::pc2b).lower};
    const double want_up[4] = {2.3655, 1.9656, 1.9319, 2.1355};
    const double want_lo[4] = {0.6156, 0.6078, 0.6078, 0.6436};
    for (int i = 0; i < 4; ++i) {
        c.expect_near(uppers[i], want_up[i], 1e-3, "squared-companion upper " + std::to_string(i));
        c.expect_near(lowers[i], want_lo[i], 1e-3, "squared-companion lower " + std::to_string(i));
    }
    return c;
}

// ---------------------------------------------------------------- criterion 7
Criterion criterion7() {
    Criterion c;
    const OpferComparison a = opfer_comparison(fixtures::alpha_below_cubic());
    c.expect(a.alpha == 4.0, "alpha of the first cubic");
    c.expect(a.t_bound == 5.5, "sum bound of the first cubic");
    const OpferComparison b = opfer_comparison(fixtures::alpha_above_cubic());
    c.expect(b.alpha == 1.5, "alpha of the second cubic");
    c.expect_near(b.t_bound, 1.36, 1e-3, "sum bound of the second cubic");

    fixtures::Rng rng(701);
    int violations = 0;
    for (int it = 0; it < 5000; ++it) {
        QPolynomial p = rng.qpoly(it % 2 ? Side::left : Side::right, 2 + rng.index(5), 1.5);
        std::vector<Quaternion> cs = p.coeffs();
        if (norm(cs[0]) < 1.0) {
            Quaternion q0 = cs[0];
            if (norm(q0) < 1e-9) q0 = Quaternion::i();
            cs[0] = q0 * ((1.0 + rng.uniform()) / norm(q0));
            p = QPolynomial(p.side(), cs);
        }
        const OpferComparison oc = opfer_comparison(p);
        if (!oc.alpha_le_t) ++violations;
    }
    c.expect(violations == 0, std::to_string(violations) + " alpha > sum-bound violations");
    return c;
}

// ---------------------------------------------------------------- criterion 8
Criterion criterion8() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();

    // (a) every bound method brackets every zero modulus on random polynomials
    {
        fixtures::Rng rng(801);
        int instances = 0, failures = 0;
        while (instances < 200) {
            const Side side = instances % 2 ? Side::left : Side::right;
            const QPolynomial p = rng.qpoly(side, 2 + rng.index(4));
            const std::vector<double> mods = roots(p).moduli();
            if (mods.empty()) continue;
            ++instances;
            const double lo = *std::min_element(mods.begin(), mods.end());
            const double hi = *std::max_element(mods.begin(), mods.end());
            std::vector<BoundReport> reports;
            for (double g : {0.0, 0.25, 0.5, 0.75, 1.0})
                reports.push_back(zero_bounds(p, BoundMethod::ostrowski, {.gamma = g}));
            reports.push_back(zero_bounds(p, BoundMethod::co1));
            reports.push_back(zero_bounds(p, BoundMethod::co2));
            bool kojima_ok = true;
            for (int j = 1; j < p.degree(); ++j)
                if (norm(p.coeff(j)) == 0.0) kojima_ok = false;
            if (kojima_ok) reports.push_back(zero_bounds(p, BoundMethod::kojima));
            for (long t : {2L, 3L})
                for (double g : {0.0, 0.25, 0.5, 0.75, 1.0})
                    for (PowerVariant v : {PowerVariant::plain, PowerVariant::conjugate})
                        reports.push_back(zero_bounds(p, BoundMethod::power,
                                                      {.gamma = g, .t = t, .variant = v}));
            reports.push_back(
                zero_bounds(p, side == Side::left ? BoundMethod::pc1a : BoundMethod::pc2a));
            reports.push_back(
                zero_bounds(p, side == Side::left ? BoundMethod::pc1b : BoundMethod::pc2b));
            for (const BoundReport& b : reports)
                if (lo < b.lower - 1e-9 || hi > b.upper + 1e-9) ++failures;
        }
        c.expect(failures == 0, "(a) " + std::to_string(failures) + " bound violations");
    }

    // (b) right-eigenvalue regions contain the standard eigenvalues
    {
        fixtures::Rng rng(802);
        int failures = 0;
        for (int it = 0; it < 200; ++it) {
            const int n = 2 + rng.index(3);
            QMatrix a = rng.qmatrix(n, 1.2);
            for (int i = 0; i < n; ++i) a.at(i, i) = Quaternion::real(3.0 * rng.sym());
            const SpectrumReport sp = standard_eigenvalues(a);
            for (double g : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                RegionSpec h{RegionKind::holder_right_real_diag, g};
                h.p = 2.0;
                const Region regions[] = {
                    build_region(a, {RegionKind::ostrowski_right_real_diag, g}),
                    build_region(a, {RegionKind::brauer_right_real_diag, g}),
                    build_region(a, h)};
                for (const cd& ev : sp.standard)
                    for (const Region& r : regions)
                        if (!contains(r, {ev.real(), ev.imag(), 0, 0})) ++failures;
            }
        }
        c.expect(failures == 0, "(b) " + std::to_string(failures) + " containment failures");
    }

    // (c) sampled inclusions: pairwise ovals within interpolated balls, both
    // the general and the real-diagonal form
    {
        fixtures::Rng rng(803);
        int witnesses = 0;
        for (int it = 0; it < 100; ++it) {
            const int n = 2 + rng.index(3);
            const QMatrix general = rng.qmatrix(n, 1.5);
            QMatrix realdiag = rng.qmatrix(n, 1.5);
            for (int i = 0; i < n; ++i) realdiag.at(i, i) = Quaternion::real(2.0 * rng.sym());
            for (double g : {0.0, 0.25, 0.5, 1.0}) {
                const Region k = build_region(general, {RegionKind::brauer_left_ostrowski, g});
                const Region t = build_region(general, {RegionKind::ostrowski_left, g});
                if (!sampled_inclusion(k, t, static_cast<std::uint64_t>(it), 10000).subset)
                    ++witnesses;
                const Region gg = build_region(realdiag, {RegionKind::brauer_right_real_diag, g});
                const Region g0 =
                    build_region(realdiag, {RegionKind::ostrowski_right_real_diag, g});
                if (!sampled_inclusion(gg, g0, static_cast<std::uint64_t>(it) + 1, 10000).subset)
                    ++witnesses;
            }
        }
        c.expect(witnesses == 0, "(c) " + std::to_string(witnesses) + " inclusion witnesses");
    }

    // (d) structured companion powers match direct products
    {
        fixtures::Rng rng(804);
        int failures = 0;
        for (int it = 0; it < 200; ++it) {
            const Side side = it % 2 ? Side::left : Side::right;
            const QPolynomial p = rng.qpoly(side, 2 + rng.index(5));
            for (long t = 2; t <= 9; ++t) {
                const double scale = std::pow(2.0 + norm(p.coeff(0)), static_cast<double>(t));
                if (dist_inf(companion_power_structured(p, t), power(companion(p), t)) >
                    1e-12 * scale)
                    ++failures;
            }
        }
        c.expect(failures == 0, "(d) " + std::to_string(failures) + " structured-power mismatches");
    }

    // (e) adjoint homomorphism and conjugate-pair spectra
    {
        fixtures::Rng rng(805);
        int failures = 0;
        for (int it = 0; it < 200; ++it) {
            const int n = 1 + rng.index(4);
            const QMatrix a = rng.qmatrix(n, 1.3), b = rng.qmatrix(n, 1.3);
            const ComplexMatrix pa = complex_adjoint(a), pb = complex_adjoint(b);
            const ComplexMatrix pab = complex_adjoint(a * b);
            double d = 0.0;
            for (int i = 0; i < 2 * n; ++i)
                for (int j = 0; j < 2 * n; ++j) {
                    cd s = 0;
                    for (int k = 0; k < 2 * n; ++k) s += pa.at(i, k) * pb.at(k, j);
                    d = std::max(d, std::abs(pab.at(i, j) - s));
                }
            if (d > 1e-10) ++failures;

            const SpectrumReport sp = standard_eigenvalues(a);
            std::vector<cd> rest = sp.all_adjoint;
            while (!rest.empty()) {
                const cd v = rest.back();
                rest.pop_back();
                double best = 1e100;
                size_t arg = 0;
                for (size_t q = 0; q < rest.size(); ++q)
                    if (std::abs(rest[q] - std::conj(v)) < best) {
                        best = std::abs(rest[q] - std::conj(v));
                        arg = q;
                    }
                if (rest.empty() || best > 1e-8) {
                    ++failures;
                    break;
                }
                rest.erase(rest.begin() + static_cast<long>(arg));
            }
        }
        c.expect(failures == 0, "(e) " + std::to_string(failures) + " adjoint invariant failures");
    }

    // (f) the column-sum oval refutation: -i escapes the degenerate oval that
    // the conjugate-based claim would require, while the corrected region
    // contains the left eigenvalue i itself
    {
        const QMatrix a = fixtures::brauer_counterexample();
        c.expect(left_eigen_residual(a, Quaternion::i()) < 1e-10, "(f) i is a left eigenvalue");
        const Region f = build_region(a, {RegionKind::brauer_col, 1.0});
        c.expect(f.parts.size() == 1 && f.parts[0].radius == 0.0, "(f) degenerate oval");
        c.expect(!contains(f, -Quaternion::i()), "(f) conjugate escapes the oval");
        c.expect(contains(f, Quaternion::i()), "(f) eigenvalue lies in the corrected region");
    }

    const double elapsed = ms_since(t0);
    c.expect(elapsed < 60000.0, "runtime " + std::to_string(elapsed) + " ms >= 60 s");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
        {"interpolated balls and pairwise ovals on the real-diagonal 3x3", criterion1},
        {"row-sum discs and containment failures on the nonreal-diagonal 3x3", criterion2},
        {"row-sum radii and stability of the dominant-diagonal 3x3", criterion3},
        {"weighted ball radii and weighted oval bound, exact", criterion4},
        {"degree-6 root table and bound table", criterion5},
        {"squared companions and their bound table", criterion6},
        {"alpha versus sum bound: fixtures and 5000-case property", criterion7},
        {"property suites (a)-(f)", criterion8},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const Criterion c = criteria[i].second();
        if (!c.ok) ++failed;
        std::printf("[%s] criterion %zu: %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), c.ok ? "" : " -- ", c.detail.c_str());
    }
    if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed;
}
