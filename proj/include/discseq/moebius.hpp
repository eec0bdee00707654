#pragma once

#include "discseq/point.hpp"

namespace discseq {

/// Fractional-linear map z -> (az + b) / (cz + d), ad - bc != 0.
struct MoebiusMap {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    /// Validates the determinant against the coefficient scale; throws DegenerateMap.
    static MoebiusMap make(Complex a, Complex b, Complex c, Complex d);

    static MoebiusMap identity() { return MoebiusMap{}; }

    /// The Cayley involution z -> (1 - z)/(1 + z) as a map, coefficients (-1, 1, 1, 1).
    static MoebiusMap cayley();

    Complex det() const { return a * d - b * c; }

    /// Evaluates the map; throws PoleInput at the pole cz + d = 0.
    Complex apply(Complex z) const;

    /// Inverse map with coefficients (d, -b, -c, a); same map up to projective scale.
    MoebiusMap inverse() const { return MoebiusMap{d, -b, -c, a}; }

    /// Composition: (*this) after other.
    MoebiusMap compose(const MoebiusMap& other) const;

    bool is_cayley() const;

    /// True for any projective multiple of the identity.
    bool is_identity() const { return b == Complex{0.0} && c == Complex{0.0} && a == d && a != Complex{0.0}; }
};

/// z -> (1 - z)/(1 + z). Exchanges the unit disc and the right half-plane; an involution.
Complex cayley(Complex z);

/// Generalized circle (circle or line) as the Hermitian form
///   a|z|^2 + 2 Re(conj(b) z) + c = 0,   a, c real.
/// The unit circle is (1, 0, -1); the imaginary axis is (0, 1, 0).
struct HermitianCircle {
    double a{0.0};
    Complex b{0.0};
    double c{0.0};

    static HermitianCircle unit_circle() { return {1.0, Complex{0.0}, -1.0}; }
    static HermitianCircle imaginary_axis() { return {0.0, Complex{1.0}, 0.0}; }

    /// Image of this generalized circle under the Moebius map m.
    HermitianCircle map_forward(const MoebiusMap& m) const;

    /// Euclidean distance from p to the circle/line this form describes.
    double distance_to(Complex p) const;

    /// True when the form describes a line (vanishing quadratic coefficient
    /// relative to the linear one).
    bool is_line() const;
};

} // namespace discseq
