#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discseq/domain.hpp"
#include "discseq/moebius.hpp"
#include "discseq/point.hpp"

namespace discseq {

enum class Method {
    HalfplaneLine,
    DiscHorocycle,
    GreedyPack,
    External,
};

const char* method_name(Method m);
Method method_from_name(const std::string& name); // throws SchemaError on unknown names

struct SequenceMeta {
    Method method = Method::External;
    std::optional<double> epsilon; // boundary distance of the line/horocycle families
    std::optional<double> delta;   // nominal separation
};

/// An ordered point cloud in one domain, plus how it was made.
struct PointSequence {
    Domain domain;
    std::vector<Point> points;
    SequenceMeta meta;

    std::size_t size() const { return points.size(); }
};

/// w_k = eps + i * 2 eps * sinh(k delta) on the vertical line Re = eps.
/// Pairwise law: d(w_h, w_k) = arcsinh(sinh(k delta) - sinh(h delta)), so
/// d(w_0, w_k) = k delta exactly and the minimum pairwise gap is delta.
/// Requires eps > 0, delta > 0 (NonpositiveParameter), n_points >= 1
/// (TooFewPoints), n_points * delta <= 350 (OverflowGuard on sinh).
PointSequence construct_halfplane_line_sequence(double eps, double delta, std::size_t n_points);

/// Cayley images of the line sequence; the points land on horocycle_of(eps),
/// internally tangent to the unit circle at -1.
PointSequence construct_disc_horocycle_sequence(double eps, double delta, std::size_t n_points);

/// Point on the horocycle of parameter eps at hyperbolic distance `dist` from
/// `base`, walking the arc on the base's side of the real axis toward the
/// tangency point -1 (a real base walks the lower arc, matching the images of
/// the +iy half-line). Found by bracketing and bisection on the arc parameter.
/// Errors: BaseOffCurve if base is not on the horocycle within 1e-10;
/// BracketNotFound after 200 doublings (a bug guard, not a math failure).
Point find_on_horocycle(double eps, const Point& base, double target_distance);

/// Ray walk for the greedy packer: candidates are origin + t * direction.
struct RayWalk {
    Point origin;
    Point direction;          // unit Euclidean norm, same dimension as origin
    double initial_step = 0.1;
    double max_step = 1.0;
};

struct PackerConfig {
    double c = 1.0;           // Euclidean boundary-distance floor defining D_c
    double delta = 1.0;       // required pairwise Kobayashi separation
    std::size_t count = 1;    // number of points to accept
    RayWalk walk;
    double param_tol = 1e-9;  // bisection tolerance on the walk parameter
};

/// Greedy packing along a ray inside D_c = { boundary_distance >= c }: each
/// accepted point is the smallest walk parameter (step-doubling capped at
/// max_step, then bisection to param_tol) clearing every previously accepted
/// Kobayashi ball of radius delta. Kobayashi balls are never materialized;
/// clearance is a direct distance test. Deterministic and run-to-run identical.
/// Errors: OriginOutsideDc; RayEscapesDc when a probed candidate has
/// boundary_distance < c. After the walk, 1024 geometrically spaced parameters
/// up to the final accepted parameter are re-checked against D_c (a guard, not
/// a proof).
PointSequence greedy_pack(const Domain& dom, const PackerConfig& cfg);

/// Push a sequence through a Moebius map: composes with any existing transport,
/// recognizes the exact Cayley/identity maps on model domains (emitting the
/// model domain back), and refuses multi-dimensional domains
/// (UnsupportedDomain). DegenerateMap if the determinant vanishes.
PointSequence transport_sequence(const PointSequence& seq, const MoebiusMap& map);

} // namespace discseq
