#pragma once

#include <cmath>
#include <stdexcept>

namespace quatloc {

/// Element of the real quaternion skew field, q = w + x*i + y*j + z*k
/// with i^2 = j^2 = k^2 = ijk = -1. Plain value type; multiplication is
/// noncommutative, so helper code must never reorder factors.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    // Hamilton product.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }
    constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    constexpr Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    constexpr Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
};

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double re(const Quaternion& q) { return q.w; }

/// |Im(q)| = sqrt(x^2 + y^2 + z^2).
inline double im_norm(const Quaternion& q) {
    return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

inline Quaternion inverse(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) throw std::domain_error("zero quaternion has no inverse");
    return conj(q) / n2;
}

/// p and q lie in the same similarity class [q] = { rho^-1 q rho } iff their
/// real parts and imaginary moduli agree. Floating-point orbits are never
/// exact, hence the tolerance.
inline bool same_class(const Quaternion& p, const Quaternion& q, double tol = 1e-9) {
    if (tol < 0.0) throw std::invalid_argument("same_class: tol must be >= 0");
    return std::abs(re(p) - re(q)) <= tol && std::abs(im_norm(p) - im_norm(q)) <= tol;
}

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
    return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol &&
           std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

/// Max componentwise distance, used by entrywise matrix comparisons.
inline double dist_inf(const Quaternion& a, const Quaternion& b) {
    double d = std::abs(a.w - b.w);
    d = std::max(d, std::abs(a.x - b.x));
    d = std::max(d, std::abs(a.y - b.y));
    d = std::max(d, std::abs(a.z - b.z));
    return d;
}

}  // namespace quatloc
