#include "discseq/domain.hpp"

#include <cmath>

#include "discseq/error.hpp"

namespace discseq {

namespace {

// Rounding slack for the closed membership test: a point constructed inside
// the domain can land up to about one ulp of |z|^2 outside once stored (the
// Cayley images near the tangency point do exactly that), so "on the boundary
// at working precision" extends this far below zero.
constexpr double kBoundarySlack = 1e-15;

// Signed Euclidean gap to the unit circle; the (1 - |z|^2)/(1 + |z|) form
// avoids the cancellation of 1 - |z| near the boundary.
double disc_gap(Complex z) {
    return (1.0 - std::norm(z)) / (1.0 + std::abs(z));
}

// All one-dimensional distances share the shape d = asinh(sinh d); the
// per-domain part only supplies sinh d. Absolute error stays near machine
// epsilon for every magnitude, which is what the closed-form sequence
// identities rely on.
double disc_dist(Complex p, Complex q) {
    const double m = std::abs(p - q);
    if (m == 0.0) return 0.0;
    // Clamp at the boundary: |z|^2 can round one ulp past 1, and a negative
    // factor would turn the sqrt into NaN. Distinct points with a zero factor
    // give +inf, the honest value for a boundary point at working precision.
    const double gp = std::max(0.0, 1.0 - std::norm(p));
    const double gq = std::max(0.0, 1.0 - std::norm(q));
    return std::asinh(m / std::sqrt(gp * gq));
}

double halfplane_dist(Complex p, Complex q) {
    const double m = std::abs(p - q);
    if (m == 0.0) return 0.0;
    // fabs turns a stored -0.0 real part into +0.0 so the boundary corner
    // yields +inf, not -inf. sqrt(xp)*sqrt(xq) instead of sqrt(xp*xq): the
    // product under/overflows before the individual roots do.
    const double s = (m / std::sqrt(std::fabs(p.real()))) / (2.0 * std::sqrt(std::fabs(q.real())));
    return std::asinh(s);
}

double ball_dist(const Point& p, const Point& q) {
    // sinh^2 d = (|p-q|^2 - G) / ((1-|p|^2)(1-|q|^2)) with the Lagrange
    // cross-term G = sum_{i<j} |p_i q_j - p_j q_i|^2, so the numerator is the
    // exact counterpart of |1 - <p,q>|^2 - (1-|p|^2)(1-|q|^2).
    const int n = p.dimension();
    double m2 = 0.0, np = 0.0, nq = 0.0;
    for (int i = 0; i < n; ++i) {
        m2 += std::norm(p.coords[i] - q.coords[i]);
        np += std::norm(p.coords[i]);
        nq += std::norm(q.coords[i]);
    }
    if (m2 == 0.0) return 0.0;
    double cross = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            cross += std::norm(p.coords[i] * q.coords[j] - p.coords[j] * q.coords[i]);
    const double num = std::max(0.0, m2 - cross);
    if (num == 0.0) return 0.0;
    const double den = std::max(0.0, 1.0 - np) * std::max(0.0, 1.0 - nq);
    return std::asinh(std::sqrt(num) / std::sqrt(den));
}

double polydisc_dist(const Point& p, const Point& q) {
    // max over coordinates, reduced on sinh^2 so only one asinh runs.
    double worst = 0.0;
    for (int i = 0; i < p.dimension(); ++i) {
        const Complex pc = p.coords[i], qc = q.coords[i];
        const double m2 = std::norm(pc - qc);
        if (m2 == 0.0) continue;
        const double x = m2 / (std::max(0.0, 1.0 - std::norm(pc)) * std::max(0.0, 1.0 - std::norm(qc)));
        if (x > worst) worst = x;
    }
    return std::asinh(std::sqrt(worst));
}

HermitianCircle transported_boundary(const TransportedTag& tag) {
    const HermitianCircle base = tag.base == BaseKind::UnitDisc
                                     ? HermitianCircle::unit_circle()
                                     : HermitianCircle::imaginary_axis();
    return base.map_forward(tag.map);
}

double transported_gap(const TransportedTag& tag, Complex z) {
    // Magnitude: Euclidean distance to the transported boundary circle/line.
    // Sign: membership of the preimage in the base domain.
    const double dist = transported_boundary(tag).distance_to(z);
    bool inside = false;
    try {
        const Complex z0 = tag.map.inverse().apply(z);
        const double g = tag.base == BaseKind::UnitDisc ? disc_gap(z0) : z0.real();
        inside = g >= -kBoundarySlack;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::PoleInput) throw;
        inside = false; // preimage at infinity
    }
    return inside ? dist : -dist;
}

} // namespace

Domain Domain::unit_ball(int n) {
    if (n < 1) raise(ErrorCode::NonpositiveParameter, "ball dimension must be >= 1");
    return Domain{UnitBallTag{n}};
}

Domain Domain::polydisc(int n) {
    if (n < 1) raise(ErrorCode::NonpositiveParameter, "polydisc dimension must be >= 1");
    return Domain{PolydiscTag{n}};
}

Domain Domain::transported(BaseKind base, const MoebiusMap& map) {
    return Domain{TransportedTag{base, MoebiusMap::make(map.a, map.b, map.c, map.d)}};
}

int Domain::dimension() const {
    struct V {
        int operator()(const UnitDiscTag&) const { return 1; }
        int operator()(const RightHalfPlaneTag&) const { return 1; }
        int operator()(const UnitBallTag& t) const { return t.dim; }
        int operator()(const PolydiscTag& t) const { return t.dim; }
        int operator()(const TransportedTag&) const { return 1; }
    };
    return std::visit(V{}, v_);
}

bool operator==(const Domain& x, const Domain& y) {
    if (x.v_.index() != y.v_.index()) return false;
    if (const auto* b = std::get_if<UnitBallTag>(&x.v_))
        return b->dim == std::get<UnitBallTag>(y.v_).dim;
    if (const auto* p = std::get_if<PolydiscTag>(&x.v_))
        return p->dim == std::get<PolydiscTag>(y.v_).dim;
    if (const auto* t = std::get_if<TransportedTag>(&x.v_)) {
        const auto& u = std::get<TransportedTag>(y.v_);
        return t->base == u.base && t->map.a == u.map.a && t->map.b == u.map.b &&
               t->map.c == u.map.c && t->map.d == u.map.d;
    }
    return true;
}

double signed_boundary_gap(const Domain& dom, const Point& p) {
    struct V {
        const Point& p;
        double operator()(const UnitDiscTag&) const { return disc_gap(p.z()); }
        double operator()(const RightHalfPlaneTag&) const { return p.z().real(); }
        double operator()(const UnitBallTag&) const {
            double n2 = 0.0;
            for (const Complex& c : p.coords) n2 += std::norm(c);
            return (1.0 - n2) / (1.0 + std::sqrt(n2));
        }
        double operator()(const PolydiscTag&) const {
            double worst = disc_gap(p.coords[0]);
            for (int i = 1; i < p.dimension(); ++i)
                worst = std::min(worst, disc_gap(p.coords[i]));
            return worst;
        }
        double operator()(const TransportedTag& t) const { return transported_gap(t, p.z()); }
    };
    if (p.dimension() != dom.dimension())
        raise(ErrorCode::DimensionMismatch, "point dimension does not match the domain");
    return std::visit(V{p}, dom.variant());
}

bool contains(const Domain& dom, const Point& p, double margin) {
    if (p.dimension() != dom.dimension())
        raise(ErrorCode::DimensionMismatch, "point dimension does not match the domain");
    if (!p.finite()) return false;
    return signed_boundary_gap(dom, p) >= margin - kBoundarySlack;
}

double boundary_distance(const Domain& dom, const Point& p) {
    if (!contains(dom, p))
        raise(ErrorCode::PointOutsideDomain, "point is not inside the domain");
    // A point admitted on slack sits on the boundary at working precision.
    return std::max(0.0, signed_boundary_gap(dom, p));
}

double kobayashi_distance(const Domain& dom, const Point& p, const Point& q) {
    if (p.dimension() != q.dimension())
        raise(ErrorCode::DimensionMismatch, "points have different dimensions");
    if (!contains(dom, p))
        raise(ErrorCode::PointOutsideDomain, "first argument is not inside the domain");
    if (!contains(dom, q))
        raise(ErrorCode::PointOutsideDomain, "second argument is not inside the domain");

    struct V {
        const Point& p;
        const Point& q;
        double operator()(const UnitDiscTag&) const { return disc_dist(p.z(), q.z()); }
        double operator()(const RightHalfPlaneTag&) const { return halfplane_dist(p.z(), q.z()); }
        double operator()(const UnitBallTag&) const { return ball_dist(p, q); }
        double operator()(const PolydiscTag&) const { return polydisc_dist(p, q); }
        double operator()(const TransportedTag& t) const {
            const MoebiusMap inv = t.map.inverse();
            const Complex p0 = inv.apply(p.z());
            const Complex q0 = inv.apply(q.z());
            return t.base == BaseKind::UnitDisc ? disc_dist(p0, q0) : halfplane_dist(p0, q0);
        }
    };
    return std::visit(V{p, q}, dom.variant());
}

Horocycle horocycle_of(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        raise(ErrorCode::NonpositiveEpsilon, "horocycle parameter must be positive");
    return Horocycle{epsilon, Complex{-epsilon / (1.0 + epsilon), 0.0}, 1.0 / (1.0 + epsilon)};
}

} // namespace discseq
