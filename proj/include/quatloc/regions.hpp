#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatloc/qmat.hpp"

namespace quatloc {

/// Quaternionic inclusion set: a closed ball |q - center| <= radius, a closed
/// oval of Cassini |q - c1| |q - c2| <= bound, or a finite union/intersection.
struct Region {
    enum class Kind { ball, cassini, union_of, intersection_of };

    Kind kind = Kind::ball;
    Quaternion center, c1, c2;
    double radius = 0.0;  // ball radius or cassini bound, clamped at 0
    std::vector<Region> parts;

    static Region ball(const Quaternion& center, double radius);
    static Region cassini(const Quaternion& c1, const Quaternion& c2, double bound);
    static Region union_of(std::vector<Region> parts);
    static Region intersection_of(std::vector<Region> parts);
};

/// Pointwise membership with a relative slack of 1e-9 to absorb rounding.
bool contains(const Region& r, const Quaternion& q);

/// Which localization family to build.
enum class RegionKind {
    gersch_row,                // balls of radius r_i, left eigenvalues
    gersch_col,                // balls of radius c_i, left eigenvalues
    ostrowski_left,            // r_i^g c_i^(1-g), left eigenvalues
    ostrowski_right_real_diag, // same radii, right eigenvalues, real diagonal
    brauer_col,                // ovals with c_i c_j, left eigenvalues
    brauer_left_ostrowski,     // ovals with r_i^g r_j^g c_i^(1-g) c_j^(1-g)
    brauer_right_real_diag,    // same ovals, right eigenvalues, real diagonal
    holder_left,               // (n-1)^((1-g)/q) r_i^g (n_i^(p))^(1-g)
    holder_right_real_diag,    // same radii, right eigenvalues, real diagonal
};

struct RegionSpec {
    RegionKind kind = RegionKind::gersch_row;
    double gamma = 1.0;                          // in [0, 1]
    double p = 2.0;                              // Hoelder exponent, > 1
    std::optional<std::vector<double>> weights;  // positive diagonal scaling
};

/// Union of n balls or n(n-1)/2 Cassini ovals for the requested family.
/// Weighted variants compute radii from scale_similarity(A, w); centers stay
/// at the diagonal entries. The *_right_real_diag kinds require a real
/// diagonal (imaginary modulus <= 1e-12, error names the offending entry).
Region build_region(const QMatrix& a, const RegionSpec& spec);

struct InclusionResult {
    bool subset = true;
    std::optional<Quaternion> witness;  // in inner but not in outer
    std::uint64_t seed = 0;
    int samples = 0;
};

/// Samples `count` quaternions from the inner region's interiors and
/// boundary shells; reports a witness if one escapes the outer region.
/// Deterministic for a given seed (counter-based generator per sample).
InclusionResult sampled_inclusion(const Region& inner, const Region& outer,
                                  std::uint64_t seed, int count);

enum class InvertibilityVariant { ostrowski, brauer };

/// Sufficient condition |a_ii| > r_i^g c_i^(1-g) for all i (ostrowski), or
/// |a_ii||a_jj| > r_i^g r_j^g c_i^(1-g) c_j^(1-g) for all i != j (brauer).
bool invertibility_sufficient(const QMatrix& a, double gamma,
                              InvertibilityVariant variant = InvertibilityVariant::ostrowski);

/// Sufficient condition Re(a_ii) + (n-1)^((1-g)/q) r_i^g (n_i^(p))^(1-g) < 0
/// for every row; implies every right eigenvalue has negative real part.
bool stability_sufficient(const QMatrix& a, double gamma, double p);

/// Planar (complex) disc/oval descriptor for plotting.
struct DiscDescriptor {
    enum class Kind { disc, cassini };
    Kind kind = Kind::disc;
    std::complex<double> center;  // disc center, or first Cassini focus
    std::complex<double> c2;      // second Cassini focus
    double value = 0.0;           // radius or Cassini bound
};

/// Flattens a region into complex-plane descriptors. Centers with j/k parts
/// above 1e-12 are recorded as the class representative Re + |Im| i.
std::vector<DiscDescriptor> export_complex_discs(const Region& r);

}  // namespace quatloc
