#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatloc/qmat.hpp"

namespace quatloc {

/// Which side the coefficients multiply from: Left is sum q_j z^j, Right is
/// sum z^j q_j. Distinct polynomials over the skew field.
enum class Side { left, right };

/// Simple monic one-sided quaternionic polynomial q_0 .. q_m, q_m = 1.
class QPolynomial {
public:
    QPolynomial(Side side, std::vector<Quaternion> coeffs);

    Side side() const { return side_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Quaternion& coeff(int j) const { return coeffs_[static_cast<size_t>(j)]; }
    const std::vector<Quaternion>& coeffs() const { return coeffs_; }

private:
    Side side_;
    std::vector<Quaternion> coeffs_;
};

/// Direct power-accumulation evaluation honoring the coefficient side.
Quaternion eval(const QPolynomial& p, const Quaternion& z);

/// Companion matrix: last row (-q_0 ... -q_{m-1}) for Left; its transpose
/// for Right. Zeros of p are exactly its left eigenvalues.
QMatrix companion(const QPolynomial& p);

/// Monic reversal polynomial; zeros are reciprocals of the zeros of p.
/// Requires q_0 != 0.
QPolynomial reversal(const QPolynomial& p);

/// Conjugated coefficients with the side flipped; zeros are the conjugates
/// of the zeros of p.
QPolynomial tilde(const QPolynomial& p);

/// Equivalence class of zeros: every a + b*u with u unit pure imaginary.
struct SphericalClass {
    double re;       // a
    double im_norm;  // b > 0
};

struct RootSet {
    std::vector<Quaternion> isolated;
    std::vector<SphericalClass> spherical;
    double residual_tol = 0.0;

    /// Moduli of all zeros (spherical classes contribute one modulus).
    std::vector<double> moduli() const;
};

/// Class-refinement root finder: standard eigenvalues of the companion give
/// the candidate classes; one linear solve per class isolates the zero or
/// detects a spherical class.
RootSet roots(const QPolynomial& p);

enum class BoundMethod {
    ostrowski,  // gamma-interpolated row/column bound on the companion
    co1,        // closed form at gamma = 0 (column sums)
    co2,        // closed form at gamma = 1 (row sums)
    scaled,     // diagonally scaled companion, any gamma
    cs1,        // scaled closed form at gamma = 0
    cs2,        // scaled closed form at gamma = 1
    kojima,     // scaled with weights w_j = |q_j|
    power,      // t-th companion power, exponents divided by t
    pc1a,       // squared companion (Left, direct)
    pc1b,       // squared companion (Left, conjugate route)
    pc2a,       // squared companion (Right, direct)
    pc2b,       // squared companion (Right, conjugate route)
};

/// Which of the two companion families a power bound uses: the polynomial's
/// own companion, or the conjugate (tilde) route with equal zero moduli.
enum class PowerVariant { plain, conjugate };

struct BoundParams {
    double gamma = 1.0;
    long t = 2;
    std::vector<double> weights;
    PowerVariant variant = PowerVariant::plain;
};

/// Annulus [lower, upper] containing every zero modulus.
struct BoundReport {
    BoundMethod method;
    BoundParams params;
    double lower = 0.0;
    double upper = 0.0;
    bool lower_defined = true;  // false when q_0 = 0 (lower clamps to 0)
};

std::string bound_method_name(BoundMethod m);
std::optional<BoundMethod> bound_method_from_name(const std::string& name);

BoundReport zero_bounds(const QPolynomial& p, BoundMethod method, const BoundParams& params = {});

/// C^t assembled from the shifted last-row (Left) or last-column (Right)
/// recurrence instead of full matrix products. Entrywise equal to
/// power(companion(p), t).
QMatrix companion_power_structured(const QPolynomial& p, long t);

struct OpferComparison {
    double alpha;       // max{|q_0|, 1 + |q_i|}
    double t_bound;     // max{1, sum |q_i|}
    bool alpha_le_t;
};

OpferComparison opfer_comparison(const QPolynomial& p);

}  // namespace quatloc
