#include "discseq/moebius.hpp"

#include <cmath>

#include "discseq/error.hpp"

namespace discseq {

namespace {

double coeff_scale(Complex a, Complex b, Complex c, Complex d) {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
}

} // namespace

MoebiusMap MoebiusMap::make(Complex a, Complex b, Complex c, Complex d) {
    const double scale = coeff_scale(a, b, c, d);
    const Complex det = a * d - b * c;
    if (!(std::abs(det) >= 1e-12 * scale * scale))
        raise(ErrorCode::DegenerateMap, "|ad - bc| below 1e-12 of the coefficient scale");
    return MoebiusMap{a, b, c, d};
}

MoebiusMap MoebiusMap::cayley() { return MoebiusMap{{-1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}}; }

Complex MoebiusMap::apply(Complex z) const {
    const Complex den = c * z + d;
    if (std::abs(den) < 1e-300)
        raise(ErrorCode::PoleInput, "point at the pole of the map");
    return (a * z + b) / den;
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& other) const {
    // Matrix product: (this o other)(z) = this(other(z)).
    return MoebiusMap{a * other.a + b * other.c, a * other.b + b * other.d,
                      c * other.a + d * other.c, c * other.b + d * other.d};
}

bool MoebiusMap::is_cayley() const {
    return b != Complex{0.0} && a == -b && c == b && d == b;
}

Complex cayley(Complex z) {
    const Complex den = 1.0 + z;
    if (std::abs(den) < 1e-300)
        raise(ErrorCode::PoleAtMinusOne, "cayley pole at z = -1");
    return (1.0 - z) / den;
}

HermitianCircle HermitianCircle::map_forward(const MoebiusMap& m) const {
    // The curve is v^H H v = 0 with v = (z, 1) and H = [[a, b], [conj(b), c]].
    // Points w = m(z) satisfy u^H (A^H H A) u = 0 where u = (w, 1) and A is the
    // homogeneous matrix of the inverse map, A = [[d, -b], [-c, a]] of m.
    const Complex A00 = m.d, A01 = -m.b, A10 = -m.c, A11 = m.a;
    const Complex h00{a, 0.0}, h01 = b, h10 = std::conj(b), h11{c, 0.0};

    // H A
    const Complex t00 = h00 * A00 + h01 * A10;
    const Complex t01 = h00 * A01 + h01 * A11;
    const Complex t10 = h10 * A00 + h11 * A10;
    const Complex t11 = h10 * A01 + h11 * A11;
    // A^H (H A); the diagonal is real by Hermitian symmetry.
    const Complex r00 = std::conj(A00) * t00 + std::conj(A10) * t10;
    const Complex r01 = std::conj(A00) * t01 + std::conj(A10) * t11;
    const Complex r11 = std::conj(A01) * t01 + std::conj(A11) * t11;

    return HermitianCircle{r00.real(), r01, r11.real()};
}

bool HermitianCircle::is_line() const {
    return std::abs(a) <= 1e-12 * (std::abs(a) + std::abs(b) + std::abs(c));
}

double HermitianCircle::distance_to(Complex p) const {
    const double babs = std::abs(b);
    if (is_line()) {
        if (babs == 0.0)
            raise(ErrorCode::DegenerateMap, "hermitian form describes no curve");
        // Line 2 Re(conj(b) z) + c = 0.
        const double v = 2.0 * (std::conj(b) * p).real() + c;
        return std::abs(v) / (2.0 * babs);
    }
    // Circle of center -b/a, radius^2 = (|b|^2 - ac)/a^2.
    const Complex center = -b / a;
    const double r2 = (babs * babs - a * c) / (a * a);
    if (!(r2 > 0.0))
        raise(ErrorCode::DegenerateMap, "hermitian form has no real circle");
    return std::abs(std::abs(p - center) - std::sqrt(r2));
}

} // namespace discseq
