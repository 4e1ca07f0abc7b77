#include "quatloc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quatloc {

namespace {

double clamp0(double v) { return v < 0.0 ? 0.0 : v; }

void require_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must lie in [0, 1]");
}

void require_real_diagonal(const QMatrix& a) {
    for (int i = 0; i < a.size(); ++i) {
        if (im_norm(a.at(i, i)) > 1e-12)
            throw std::domain_error("right-eigenvalue region requires a real diagonal; entry (" +
                                    std::to_string(i) + "," + std::to_string(i) +
                                    ") has nonzero imaginary part");
    }
}

bool is_right_kind(RegionKind k) {
    return k == RegionKind::ostrowski_right_real_diag ||
           k == RegionKind::brauer_right_real_diag || k == RegionKind::holder_right_real_diag;
}

bool is_cassini_kind(RegionKind k) {
    return k == RegionKind::brauer_col || k == RegionKind::brauer_left_ostrowski ||
           k == RegionKind::brauer_right_real_diag;
}

}  // namespace

Region Region::ball(const Quaternion& center, double radius) {
    Region r;
    r.kind = Kind::ball;
    r.center = center;
    r.radius = clamp0(radius);
    return r;
}

Region Region::cassini(const Quaternion& c1, const Quaternion& c2, double bound) {
    Region r;
    r.kind = Kind::cassini;
    r.c1 = c1;
    r.c2 = c2;
    r.radius = clamp0(bound);
    return r;
}

Region Region::union_of(std::vector<Region> parts) {
    Region r;
    r.kind = Kind::union_of;
    r.parts = std::move(parts);
    return r;
}

Region Region::intersection_of(std::vector<Region> parts) {
    Region r;
    r.kind = Kind::intersection_of;
    r.parts = std::move(parts);
    return r;
}

bool contains(const Region& r, const Quaternion& q) {
    switch (r.kind) {
        case Region::Kind::ball:
            return norm(q - r.center) <= r.radius + 1e-9 * (1.0 + r.radius);
        case Region::Kind::cassini:
            return norm(q - r.c1) * norm(q - r.c2) <= r.radius + 1e-9 * (1.0 + r.radius);
        case Region::Kind::union_of:
            for (const Region& part : r.parts)
                if (contains(part, q)) return true;
            return false;
        case Region::Kind::intersection_of:
            for (const Region& part : r.parts)
                if (!contains(part, q)) return false;
            return true;
    }
    return false;
}

Region build_region(const QMatrix& a, const RegionSpec& spec) {
    require_gamma(spec.gamma);
    if (is_right_kind(spec.kind)) require_real_diagonal(a);
    const bool holder =
        spec.kind == RegionKind::holder_left || spec.kind == RegionKind::holder_right_real_diag;
    if (holder && !(spec.p > 1.0)) throw std::invalid_argument("holder region requires p > 1");

    QMatrix scaled;
    if (spec.weights) scaled = scale_similarity(a, *spec.weights);
    const QMatrix& b = spec.weights ? scaled : a;
    const int n = a.size();
    const double g = spec.gamma;

    std::vector<double> rsum(n), csum(n), hnorm(n);
    for (int i = 0; i < n; ++i) {
        const RowStats s = row_stats(b, i);
        rsum[i] = s.r;
        csum[i] = s.c;
        if (holder) hnorm[i] = n > 1 ? holder_norm(b, i, spec.p) : 0.0;
    }

    std::vector<Region> parts;
    if (!is_cassini_kind(spec.kind)) {
        parts.reserve(n);
        for (int i = 0; i < n; ++i) {
            double radius = 0.0;
            switch (spec.kind) {
                case RegionKind::gersch_row:
                    radius = rsum[i];
                    break;
                case RegionKind::gersch_col:
                    radius = csum[i];
                    break;
                case RegionKind::ostrowski_left:
                case RegionKind::ostrowski_right_real_diag:
                    radius = std::pow(rsum[i], g) * std::pow(csum[i], 1.0 - g);
                    break;
                case RegionKind::holder_left:
                case RegionKind::holder_right_real_diag: {
                    const double q = spec.p / (spec.p - 1.0);
                    radius = std::pow(static_cast<double>(n - 1), (1.0 - g) / q) *
                             std::pow(rsum[i], g) * std::pow(hnorm[i], 1.0 - g);
                    break;
                }
                default:
                    break;
            }
            parts.push_back(Region::ball(a.at(i, i), radius));
        }
    } else {
        if (n < 2) throw std::invalid_argument("Cassini region requires n >= 2");
        parts.reserve(static_cast<size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double bound = 0.0;
                if (spec.kind == RegionKind::brauer_col)
                    bound = csum[i] * csum[j];
                else
                    bound = std::pow(rsum[i] * rsum[j], g) * std::pow(csum[i] * csum[j], 1.0 - g);
                parts.push_back(Region::cassini(a.at(i, i), a.at(j, j), bound));
            }
    }
    return Region::union_of(std::move(parts));
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based uniform in (0, 1): independent of sample partitioning.
double u01(std::uint64_t seed, std::uint64_t sample, std::uint64_t slot) {
    const std::uint64_t h = mix64(seed ^ mix64(sample * 0x100000001b3ULL + slot));
    return ((h >> 11) + 1.0) * 0x1.0p-53;
}

void collect_leaves(const Region& r, std::vector<const Region*>& out) {
    if (r.kind == Region::Kind::ball || r.kind == Region::Kind::cassini) {
        out.push_back(&r);
        return;
    }
    for (const Region& part : r.parts) collect_leaves(part, out);
}

}  // namespace

InclusionResult sampled_inclusion(const Region& inner, const Region& outer, std::uint64_t seed,
                                  int count) {
    if (count < 1) throw std::invalid_argument("sampled_inclusion: count must be >= 1");
    InclusionResult res;
    res.seed = seed;
    res.samples = count;
    std::vector<const Region*> leaves;
    collect_leaves(inner, leaves);
    if (leaves.empty()) return res;
    const int nl = static_cast<int>(leaves.size());

    for (int s = 0; s < count; ++s) {
        const Region& leaf = *leaves[s % nl];
        Quaternion ctr;
        double scale;
        if (leaf.kind == Region::Kind::ball) {
            ctr = leaf.center;
            scale = leaf.radius;
        } else {
            ctr = ((s / nl) % 2 == 0) ? leaf.c1 : leaf.c2;
            scale = std::sqrt(leaf.radius);
        }
        // Gaussian direction from four uniforms (Box-Muller).
        const double u1 = u01(seed, s, 0), u2 = u01(seed, s, 1);
        const double u3 = u01(seed, s, 2), u4 = u01(seed, s, 3);
        constexpr double two_pi = 6.283185307179586476925287;
        const double m1 = std::sqrt(-2.0 * std::log(u1));
        const double m2 = std::sqrt(-2.0 * std::log(u3));
        Quaternion dir{m1 * std::cos(two_pi * u2), m1 * std::sin(two_pi * u2),
                       m2 * std::cos(two_pi * u4), m2 * std::sin(two_pi * u4)};
        const double dn = norm(dir);
        if (dn == 0.0) continue;
        dir = dir / dn;

        const double u5 = u01(seed, s, 4);
        double rho;
        if ((s / nl) % 2 == 0) {
            // uniform over a 4-ball recentered at the part center
            const double reff = scale + norm(ctr) + 1.0;
            rho = reff * std::pow(u5, 0.25);
        } else {
            // boundary-biased shell around the part's own scale
            rho = scale * (0.95 + 0.1 * u5);
        }
        const Quaternion q = ctr + rho * dir;
        if (contains(inner, q) && !contains(outer, q)) {
            res.subset = false;
            res.witness = q;
            return res;
        }
    }
    return res;
}

bool invertibility_sufficient(const QMatrix& a, double gamma, InvertibilityVariant variant) {
    require_gamma(gamma);
    const int n = a.size();
    std::vector<double> r(n), c(n), d(n);
    for (int i = 0; i < n; ++i) {
        const RowStats s = row_stats(a, i);
        r[i] = s.r;
        c[i] = s.c;
        d[i] = norm(a.at(i, i));
    }
    if (variant == InvertibilityVariant::ostrowski) {
        for (int i = 0; i < n; ++i)
            if (!(d[i] > std::pow(r[i], gamma) * std::pow(c[i], 1.0 - gamma))) return false;
        return true;
    }
    if (n < 2) return d[0] > 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double rhs = std::pow(r[i] * r[j], gamma) * std::pow(c[i] * c[j], 1.0 - gamma);
            if (!(d[i] * d[j] > rhs)) return false;
        }
    return true;
}

bool stability_sufficient(const QMatrix& a, double gamma, double p) {
    require_gamma(gamma);
    if (!(p > 1.0)) throw std::invalid_argument("stability_sufficient: p must be > 1");
    const int n = a.size();
    const double q = p / (p - 1.0);
    for (int i = 0; i < n; ++i) {
        const RowStats s = row_stats(a, i);
        const double hn = n > 1 ? holder_norm(a, i, p) : 0.0;
        const double radius = std::pow(static_cast<double>(n - 1), (1.0 - gamma) / q) *
                              std::pow(s.r, gamma) * std::pow(hn, 1.0 - gamma);
        if (!(re(a.at(i, i)) + radius < 0.0)) return false;
    }
    return true;
}

namespace {

std::complex<double> planar_center(const Quaternion& c) {
    if (std::abs(c.y) <= 1e-12 && std::abs(c.z) <= 1e-12) return {c.w, c.x};
    return {re(c), im_norm(c)};  // class representative
}

void collect_discs(const Region& r, std::vector<DiscDescriptor>& out) {
    switch (r.kind) {
        case Region::Kind::ball: {
            DiscDescriptor d;
            d.kind = DiscDescriptor::Kind::disc;
            d.center = planar_center(r.center);
            d.value = r.radius;
            out.push_back(d);
            break;
        }
        case Region::Kind::cassini: {
            DiscDescriptor d;
            d.kind = DiscDescriptor::Kind::cassini;
            d.center = planar_center(r.c1);
            d.c2 = planar_center(r.c2);
            d.value = r.radius;
            out.push_back(d);
            break;
        }
        default:
            for (const Region& part : r.parts) collect_discs(part, out);
    }
}

}  // namespace

std::vector<DiscDescriptor> export_complex_discs(const Region& r) {
    std::vector<DiscDescriptor> out;
    collect_discs(r, out);
    return out;
}

}  // namespace quatloc
