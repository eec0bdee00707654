#include "discseq/sequences.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "discseq/error.hpp"
#include "discseq/kernels.hpp"

namespace discseq {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        raise(ErrorCode::NonpositiveParameter, std::string(what) + " must be positive and finite");
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
    case Method::HalfplaneLine: return "halfplane-line";
    case Method::DiscHorocycle: return "disc-horocycle";
    case Method::GreedyPack: return "greedy-pack";
    case Method::External: return "external";
    }
    return "external";
}

Method method_from_name(const std::string& name) {
    if (name == "halfplane-line") return Method::HalfplaneLine;
    if (name == "disc-horocycle") return Method::DiscHorocycle;
    if (name == "greedy-pack") return Method::GreedyPack;
    if (name == "external") return Method::External;
    raise(ErrorCode::SchemaError, "unknown sequence method: " + name);
}

PointSequence construct_halfplane_line_sequence(double eps, double delta, std::size_t n_points) {
    require_positive(eps, "epsilon");
    require_positive(delta, "delta");
    if (n_points < 1) raise(ErrorCode::TooFewPoints, "n_points must be >= 1");
    if (static_cast<double>(n_points) * delta > 350.0)
        raise(ErrorCode::OverflowGuard, "n_points * delta must stay <= 350 to keep sinh in range");

    PointSequence seq{Domain::right_half_plane(), {}, SequenceMeta{Method::HalfplaneLine, eps, delta}};
    seq.points.reserve(n_points);
    for (std::size_t k = 0; k < n_points; ++k) {
        const double y = 2.0 * eps * std::sinh(static_cast<double>(k) * delta);
        seq.points.emplace_back(Complex{eps, y});
    }
    return seq;
}

PointSequence construct_disc_horocycle_sequence(double eps, double delta, std::size_t n_points) {
    // Cayley images of the line points, through the same formula path the
    // transport uses, so transporting one sequence yields the other bit for bit.
    const PointSequence line = construct_halfplane_line_sequence(eps, delta, n_points);
    PointSequence seq{Domain::unit_disc(), {}, SequenceMeta{Method::DiscHorocycle, eps, delta}};
    seq.points.reserve(n_points);
    for (const Point& w : line.points) seq.points.emplace_back(cayley(w.z()));
    return seq;
}

Point find_on_horocycle(double eps, const Point& base, double target_distance) {
    const Horocycle h = horocycle_of(eps);
    if (base.dimension() != 1)
        raise(ErrorCode::DimensionMismatch, "base point must be one-dimensional");
    require_positive(target_distance, "target distance");
    const Complex rel = base.z() - h.center;
    if (std::abs(std::abs(rel) - h.radius) > 1e-10)
        raise(ErrorCode::BaseOffCurve, "base point is not on the horocycle (tolerance 1e-10)");

    // Walk the arc on the base's side of the real axis toward the tangency
    // point -1; a real base takes the lower arc, where the images of the
    // +iy half-line live. The arc parameter s halves the remaining angular
    // gap to the tangency per unit: theta(s) interpolates by u = 1 - 2^-s,
    // which keeps the bisection's distance resolution uniform in the target.
    const double theta0 = std::atan2(rel.imag(), rel.real());
    const double theta_end = rel.imag() > 0.0 ? std::numbers::pi : -std::numbers::pi;
    const auto point_at = [&](double s) {
        const double u = 1.0 - std::exp2(-s);
        const double theta = theta0 + (theta_end - theta0) * u;
        return Point{h.center + h.radius * Complex{std::cos(theta), std::sin(theta)}};
    };
    const Domain disc = Domain::unit_disc();
    const auto dist_at = [&](double s) { return kobayashi_distance(disc, base, point_at(s)); };

    // Distance to the base is continuous in s and unbounded toward the
    // tangency, so some whole step brackets the target.
    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    for (int k = 1; k <= 200; ++k) {
        hi = static_cast<double>(k);
        if (dist_at(hi) >= target_distance) {
            bracketed = true;
            break;
        }
        lo = hi;
    }
    if (!bracketed)
        raise(ErrorCode::BracketNotFound, "no distance bracket within 200 gap halvings");
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (dist_at(mid) >= target_distance ? hi : lo) = mid;
    }
    return point_at(0.5 * (lo + hi));
}

namespace {

double euclidean_norm(const Point& p) {
    double n2 = 0.0;
    for (const Complex& c : p.coords) n2 += std::norm(c);
    return std::sqrt(n2);
}

} // namespace

PointSequence greedy_pack(const Domain& dom, const PackerConfig& cfg) {
    require_positive(cfg.c, "c");
    require_positive(cfg.delta, "delta");
    require_positive(cfg.walk.initial_step, "initial_step");
    require_positive(cfg.param_tol, "param_tol");
    if (cfg.count < 1) raise(ErrorCode::TooFewPoints, "count must be >= 1");
    if (!(cfg.walk.max_step >= cfg.walk.initial_step))
        raise(ErrorCode::NonpositiveParameter, "max_step must be >= initial_step");
    const int dim = dom.dimension();
    if (cfg.walk.origin.dimension() != dim || cfg.walk.direction.dimension() != dim)
        raise(ErrorCode::DimensionMismatch, "walk origin/direction dimension does not match the domain");
    if (std::abs(euclidean_norm(cfg.walk.direction) - 1.0) > 1e-9)
        raise(ErrorCode::NonpositiveParameter, "walk direction must have unit Euclidean norm");
    if (!cfg.walk.origin.finite() || !contains(dom, cfg.walk.origin) ||
        signed_boundary_gap(dom, cfg.walk.origin) < cfg.c)
        raise(ErrorCode::OriginOutsideDc, "walk origin must have boundary distance >= c");

    const auto at = [&](double t) {
        if (t == 0.0) return cfg.walk.origin;
        Point p;
        p.coords.reserve(dim);
        for (int i = 0; i < dim; ++i)
            p.coords.push_back(cfg.walk.origin.coords[i] + t * cfg.walk.direction.coords[i]);
        return p;
    };
    const auto require_in_dc = [&](const Point& p, double t) {
        if (!p.finite() || signed_boundary_gap(dom, p) < cfg.c)
            raise(ErrorCode::RayEscapesDc,
                  "probed candidate at walk parameter " + std::to_string(t) + " has boundary distance < c");
    };

    // Clearance against all accepted points. Model 1-D domains go through the
    // batch sinh^2 kernels with the threshold sinh^2(delta); everything else
    // compares distances directly.
    std::vector<Point> accepted;
    std::vector<double> qx, qy, scratch;
    const bool fast_disc = dom.is_unit_disc() && cfg.delta <= 350.0;
    const bool fast_half = dom.is_right_half_plane() && cfg.delta <= 350.0;
    const double sinh_delta = std::sinh(std::min(cfg.delta, 350.0));
    const double threshold = sinh_delta * sinh_delta;
    const auto cleared = [&](const Point& p) {
        if (accepted.empty()) return true;
        if (fast_disc || fast_half) {
            scratch.resize(qx.size());
            const auto& ops = kernels::active();
            const auto kernel = fast_disc ? ops.disc_sinh_sq : ops.halfplane_sinh_sq;
            kernel(p.z().real(), p.z().imag(), qx.data(), qy.data(), scratch.data(), qx.size());
            return ops.min_index(scratch.data(), scratch.size()).value >= threshold;
        }
        for (const Point& a : accepted)
            if (kobayashi_distance(dom, a, p) < cfg.delta) return false;
        return true;
    };
    const auto accept = [&](const Point& p, double t) {
        accepted.push_back(p);
        if (fast_disc || fast_half) {
            qx.push_back(p.z().real());
            qy.push_back(p.z().imag());
        }
        return t;
    };

    std::vector<double> params;
    params.push_back(accept(at(0.0), 0.0));
    while (accepted.size() < cfg.count) {
        double lo = params.back();
        double step = cfg.walk.initial_step;
        double hi = lo;
        bool found = false;
        for (int probes = 0; probes < 200000; ++probes) {
            hi = lo + step;
            const Point p = at(hi);
            require_in_dc(p, hi);
            if (cleared(p)) {
                found = true;
                break;
            }
            lo = hi;
            step = std::min(step * 2.0, cfg.walk.max_step);
        }
        if (!found)
            raise(ErrorCode::BracketNotFound, "clearance bracket not found along the ray");
        while (hi - lo > cfg.param_tol) {
            const double mid = 0.5 * (lo + hi);
            const Point p = at(mid);
            require_in_dc(p, mid);
            if (cleared(p))
                hi = mid;
            else
                lo = mid;
        }
        params.push_back(accept(at(hi), hi));
    }

    // Guard, not a proof: re-check D_c membership on geometrically spaced
    // parameters up to the final accepted one.
    const double t_last = params.back();
    if (t_last > 0.0) {
        for (int i = 1; i <= 1024; ++i) {
            const double t = t_last * std::exp2(-60.0 * (1.0 - static_cast<double>(i) / 1024.0));
            require_in_dc(at(t), t);
        }
    }

    return PointSequence{dom, std::move(accepted),
                         SequenceMeta{Method::GreedyPack, std::nullopt, cfg.delta}};
}

PointSequence transport_sequence(const PointSequence& seq, const MoebiusMap& map) {
    const MoebiusMap m = MoebiusMap::make(map.a, map.b, map.c, map.d);

    BaseKind base;
    MoebiusMap total = m;
    if (seq.domain.is_unit_disc()) {
        base = BaseKind::UnitDisc;
    } else if (seq.domain.is_right_half_plane()) {
        base = BaseKind::RightHalfPlane;
    } else if (const auto* tag = std::get_if<TransportedTag>(&seq.domain.variant())) {
        base = tag->base;
        total = m.compose(tag->map);
    } else {
        raise(ErrorCode::UnsupportedDomain, "transport is defined for one-dimensional domains only");
    }

    Domain target = Domain::unit_disc();
    if (total.is_identity()) {
        target = base == BaseKind::UnitDisc ? Domain::unit_disc() : Domain::right_half_plane();
    } else if (total.is_cayley()) {
        // cayley swaps the two model domains
        target = base == BaseKind::UnitDisc ? Domain::right_half_plane() : Domain::unit_disc();
    } else {
        target = Domain::transported(base, total);
    }

    PointSequence out{target, {}, seq.meta};
    out.points.reserve(seq.points.size());
    for (std::size_t i = 0; i < seq.points.size(); ++i) {
        const Complex z = seq.points[i].z();
        try {
            // canonical paths keep transported coordinates bit-identical with
            // the direct constructions
            if (m.is_identity())
                out.points.emplace_back(z);
            else if (m.is_cayley())
                out.points.emplace_back(cayley(z));
            else
                out.points.emplace_back(m.apply(z));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PoleInput && e.code() != ErrorCode::PoleAtMinusOne) throw;
            raise(e.code(), "point " + std::to_string(i) + " sits at the pole of the map");
        }
    }
    return out;
}

} // namespace discseq
