#pragma once

#include <variant>

#include "discseq/moebius.hpp"
#include "discseq/point.hpp"

namespace discseq {

enum class BaseKind { UnitDisc, RightHalfPlane };

struct UnitDiscTag {};
struct RightHalfPlaneTag {};
struct UnitBallTag { int dim; };
struct PolydiscTag { int dim; };

/// A one-dimensional model domain carried through a Moebius map.
/// The domain is the image of the base under the map; the Kobayashi distance
/// is evaluated on preimages and the Euclidean boundary distance against the
/// transported boundary circle/line.
struct TransportedTag {
    BaseKind base;
    MoebiusMap map;
};

/// A tagged model domain with its metric and boundary-distance rules.
class Domain {
public:
    using Variant = std::variant<UnitDiscTag, RightHalfPlaneTag, UnitBallTag, PolydiscTag, TransportedTag>;

    static Domain unit_disc() { return Domain{UnitDiscTag{}}; }
    static Domain right_half_plane() { return Domain{RightHalfPlaneTag{}}; }
    static Domain unit_ball(int n);
    static Domain polydisc(int n);
    static Domain transported(BaseKind base, const MoebiusMap& map);

    int dimension() const;
    const Variant& variant() const { return v_; }

    bool is_unit_disc() const { return std::holds_alternative<UnitDiscTag>(v_); }
    bool is_right_half_plane() const { return std::holds_alternative<RightHalfPlaneTag>(v_); }
    bool is_transported() const { return std::holds_alternative<TransportedTag>(v_); }

    friend bool operator==(const Domain& x, const Domain& y);

private:
    explicit Domain(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Membership test. The comparison is closed at working precision: the gap may
/// undershoot `margin` by up to 1e-15 and still count as inside. Constructors
/// only emit points of the open domain, but near the disc boundary the stored
/// doubles collapse onto |z| = 1 -- and can overshoot it by one ulp of |z|^2 --
/// and those still pass with the default margin 0.
bool contains(const Domain& dom, const Point& p, double margin = 0.0);

/// Euclidean distance from p to the boundary of dom. Disc/ball use the stable
/// form (1 - |p|^2)/(1 + |p|); the half-plane uses Re p exactly.
double boundary_distance(const Domain& dom, const Point& p);

/// Kobayashi distance under the convention d(0, r) = atanh(r) on the unit disc.
double kobayashi_distance(const Domain& dom, const Point& p, const Point& q);

/// Signed boundary gap without the membership check (negative outside).
/// Shared by contains() and boundary_distance().
double signed_boundary_gap(const Domain& dom, const Point& p);

/// Circle internally tangent to the unit circle at -1: the Cayley image of the
/// vertical line Re = epsilon.
struct Horocycle {
    double epsilon;
    Complex center;
    double radius;
};

/// center = -eps/(1+eps), radius = 1/(1+eps). Throws NonpositiveEpsilon.
Horocycle horocycle_of(double epsilon);

} // namespace discseq
