#pragma once

// Shared numeric fixtures for the test suites. Matrices and polynomials are
// named by what they exercise, not where they came from.

#include <cmath>
#include <cstdint>
#include <vector>

#include "quatloc/qmat.hpp"
#include "quatloc/qpoly.hpp"

namespace fixtures {

using quatloc::QMatrix;
using quatloc::QPolynomial;
using quatloc::Quaternion;
using quatloc::Side;

inline const Quaternion qi = Quaternion::i();
inline const Quaternion qj = Quaternion::j();
inline const Quaternion qk = Quaternion::k();

// 3x3 with real diagonal (3, -2, -5) and mixed quaternionic off-diagonals;
// deleted row sums (6, 11, 8), column sums (11, 5, 9).
inline QMatrix real_diag_3x3() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    QMatrix a(3);
    a.at(0, 0) = {3, 0, 0, 0};
    a.at(0, 1) = {1, 1, 1, -1};
    a.at(0, 2) = {2, 0, 3, -s3};
    a.at(1, 0) = {5, 0, s2, 3};
    a.at(1, 1) = {-2, 0, 0, 0};
    a.at(1, 2) = {0, 0, 3, 4};
    a.at(2, 0) = {4, 0, 3, 0};
    a.at(2, 1) = {2, -1, 0, -2};
    a.at(2, 2) = {-5, 0, 0, 0};
    return a;
}

// Upper triangular with nonreal complex diagonal (1-2i, -2i, 3+i); its
// standard eigenvalues escape the row-sum discs.
inline QMatrix nonreal_diag_triangular() {
    QMatrix a(3);
    a.at(0, 0) = {1, -2, 0, 0};
    a.at(0, 1) = qj;
    a.at(0, 2) = qk;
    a.at(1, 1) = {0, -2, 0, 0};
    a.at(1, 2) = {0, -1, 0, 0};
    a.at(2, 1) = qk;
    a.at(2, 2) = {3, 1, 0, 0};
    return a;
}

// Diagonally dominant with negative real diagonal (-4, -10, -8); row sums
// (3, sqrt2 + sqrt5, 7), so the row-sum stability test fires.
inline QMatrix stable_3x3() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    QMatrix a(3);
    a.at(0, 0) = {-4, 0, 0, 0};
    a.at(0, 1) = {1, 0, 1, s2};
    a.at(0, 2) = qj;
    a.at(1, 0) = {0, 1, 1, 0};
    a.at(1, 1) = {-10, 0, 0, 0};
    a.at(1, 2) = {0, 0, 2, -1};
    a.at(2, 0) = {0, 1, -2, 2};
    a.at(2, 1) = {s3, 0, 2, -3};
    a.at(2, 2) = {-8, 0, 0, 0};
    return a;
}

// Upper triangular with quaternionic diagonal (j, i+k, 2-i); row sums
// (4, 2, 0). Weighted scalings sharpen its balls and ovals.
inline QMatrix weighted_triangular() {
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
    QMatrix a(3);
    a.at(0, 0) = qj;
    a.at(0, 1) = qk;
    a.at(0, 2) = {0, 0, 2, s5};
    a.at(1, 1) = {0, 1, 0, 1};
    a.at(1, 2) = {0, s2, 1, -1};
    a.at(2, 2) = {2, -1, 0, 0};
    return a;
}

// [[i, k], [0, j]]: i is a left eigenvalue, -i escapes the column-sum oval
// through i and j, the conjugate-based oval claim fails on it.
inline QMatrix brauer_counterexample() {
    QMatrix a(2);
    a.at(0, 0) = qi;
    a.at(0, 1) = qk;
    a.at(1, 1) = qj;
    return a;
}

// Degree-6 polynomial with two isolated zeros (-i-2k, -0.6i-0.8k) and two
// spherical zero classes [sqrt3 i], [sqrt2 i] in its left form.
inline QPolynomial degree6(Side side) {
    return {side,
            {{-12, 0, 6, 0},
             {0, 6, 0, 18},
             {-4, 0, 5, 0},
             {0, 5, 0, 15},
             {3, 0, 1, 0},
             {0, 1, 0, 3},
             {1, 0, 0, 0}}};
}

// Cubic q0 = i+j, q1 = k-j, q2 = -k whose squared companions witness
// C^2_{p_r} != (C^2_{p_l})^T.
inline QPolynomial noncommuting_cubic(Side side) {
    return {side, {{0, 1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}, {1, 0, 0, 0}}};
}

// z^2 + j z + 2: zero at j; i is a right (not left) eigenvalue of the
// companion and not a zero.
inline QPolynomial quadratic_with_j_root() {
    return {Side::left, {{2, 0, 0, 0}, qj, {1, 0, 0, 0}}};
}

// Cubics around the alpha-vs-T comparison: |q0| < 1 with alpha < T and
// alpha > T respectively.
inline QPolynomial alpha_below_cubic() {
    return {Side::left, {{0, 0, 0, 0.5}, {0, 0, 0, -2}, {0, 1, 2, 2}, {1, 0, 0, 0}}};
}
inline QPolynomial alpha_above_cubic() {
    return {Side::left, {{0, 0.5, 0, 0}, {0, 0.2, 0.3, 0}, {0, 0, 0.5, 0}, {1, 0, 0, 0}}};
}

// Deterministic pseudo-random helpers shared by the property suites.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
    double sym() { return 2.0 * uniform() - 1.0; }  // in [-1, 1]
    int index(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }
    Quaternion quat(double scale = 1.0) {
        return {scale * sym(), scale * sym(), scale * sym(), scale * sym()};
    }
    QMatrix qmatrix(int n, double scale = 1.0) {
        QMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = quat(scale);
        return a;
    }
    QPolynomial qpoly(Side side, int degree, double scale = 1.0) {
        std::vector<Quaternion> cs(static_cast<size_t>(degree) + 1);
        for (int j = 0; j < degree; ++j) cs[static_cast<size_t>(j)] = quat(scale);
        cs[static_cast<size_t>(degree)] = Quaternion::real(1.0);
        return {side, std::move(cs)};
    }
};

}  // namespace fixtures
