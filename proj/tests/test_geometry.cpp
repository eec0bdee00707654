#include <cmath>
#include <random>

#include "doctest.h"

#include "discseq/domain.hpp"
#include "discseq/error.hpp"
#include "discseq/moebius.hpp"
#include "helpers.hpp"

using namespace discseq;

namespace {

std::mt19937_64 rng(987654321u);

Complex random_disc_point(double rmax = 0.995) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = rmax * std::sqrt(u(rng));
    const double t = 2.0 * M_PI * u(rng);
    return Complex{r * std::cos(t), r * std::sin(t)};
}

} // namespace

TEST_CASE("disc distance matches the atanh normalization") {
    const Domain disc = Domain::unit_disc();
    for (double r : {0.1, 0.5, 0.9, 0.99}) {
        const double d = kobayashi_distance(disc, Point{Complex{0.0, 0.0}}, Point{Complex{r, 0.0}});
        CHECK(d == doctest::Approx(std::atanh(r)).epsilon(1e-14));
    }
    // very close to the boundary the 1-r^2 evaluation sheds ~6 digits
    const double dnear = kobayashi_distance(disc, Point{Complex{0.0, 0.0}}, Point{Complex{0.999999, 0.0}});
    CHECK(dnear == doctest::Approx(std::atanh(0.999999)).epsilon(1e-10));
    CHECK(kobayashi_distance(disc, Point{Complex{0.3, -0.2}}, Point{Complex{0.3, -0.2}}) == 0.0);
}

TEST_CASE("disc metric axioms on random points") {
    const Domain disc = Domain::unit_disc();
    for (int i = 0; i < 200; ++i) {
        const Point a{random_disc_point()}, b{random_disc_point()}, c{random_disc_point()};
        const double dab = kobayashi_distance(disc, a, b);
        const double dba = kobayashi_distance(disc, b, a);
        const double dac = kobayashi_distance(disc, a, c);
        const double dcb = kobayashi_distance(disc, c, b);
        CHECK(dab == dba);
        CHECK(dab >= 0.0);
        CHECK(dab <= dac + dcb + 1e-12);
    }
}

TEST_CASE("half-plane vertical line closed form") {
    const Domain hp = Domain::right_half_plane();
    for (double t : {0.1, 1.0, 7.5, 1e6}) {
        const double d = kobayashi_distance(hp, Point{Complex{1.0, 0.0}}, Point{Complex{1.0, t}});
        CHECK(d == doctest::Approx(std::asinh(t / 2.0)).epsilon(1e-14));
    }
    // horizontal: d(x1, x2) = |log(x2/x1)| / 2
    const double d = kobayashi_distance(hp, Point{Complex{1.0, 0.0}}, Point{Complex{std::exp(2.0), 0.0}});
    CHECK(d == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("cayley transport is an isometry and an involution") {
    const Domain disc = Domain::unit_disc();
    const Domain hp = Domain::right_half_plane();
    for (int i = 0; i < 300; ++i) {
        const Complex p = random_disc_point(), q = random_disc_point();
        const Complex wp = cayley(p), wq = cayley(q);
        CHECK(wp.real() > 0.0);
        const double dd = kobayashi_distance(disc, Point{p}, Point{q});
        const double dh = kobayashi_distance(hp, Point{wp}, Point{wq});
        CHECK(std::fabs(dd - dh) <= 1e-11 * (1.0 + dd));
        CHECK(std::abs(cayley(wp) - p) <= 1e-13);
    }
}

TEST_CASE("unit ball reduces to the disc in dimension 1") {
    const Domain ball = Domain::unit_ball(1);
    const Domain disc = Domain::unit_disc();
    for (int i = 0; i < 100; ++i) {
        const Point a{random_disc_point()}, b{random_disc_point()};
        const double d1 = kobayashi_distance(ball, a, b);
        const double d2 = kobayashi_distance(disc, a, b);
        CHECK(std::fabs(d1 - d2) <= 1e-12 * (1.0 + d2));
    }
}

TEST_CASE("unit ball cross-term identity") {
    // |p-q|^2 - G equals |1 - <p,q>|^2 - (1-|p|^2)(1-|q|^2); the distance built
    // on the first form must match a direct evaluation of the second.
    const Domain ball = Domain::unit_ball(3);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (int i = 0; i < 100; ++i) {
        Point p{{Complex{u(rng), u(rng)}, Complex{u(rng), u(rng)}, Complex{u(rng), u(rng)}}};
        Point q{{Complex{u(rng), u(rng)}, Complex{u(rng), u(rng)}, Complex{u(rng), u(rng)}}};
        Complex dot{0.0, 0.0};
        double np = 0.0, nq = 0.0;
        for (int k = 0; k < 3; ++k) {
            dot += p.coords[k] * std::conj(q.coords[k]);
            np += std::norm(p.coords[k]);
            nq += std::norm(q.coords[k]);
        }
        const double direct =
            std::asinh(std::sqrt((std::norm(1.0 - dot) - (1.0 - np) * (1.0 - nq)) / ((1.0 - np) * (1.0 - nq))));
        const double d = kobayashi_distance(ball, p, q);
        CHECK(d == doctest::Approx(direct).epsilon(5e-14));
    }
}

TEST_CASE("polydisc distance is the max of coordinate distances") {
    const Domain poly = Domain::polydisc(3);
    const Domain disc = Domain::unit_disc();
    for (int i = 0; i < 100; ++i) {
        Point p{{random_disc_point(), random_disc_point(), random_disc_point()}};
        Point q{{random_disc_point(), random_disc_point(), random_disc_point()}};
        double expect = 0.0;
        for (int k = 0; k < 3; ++k)
            expect = std::max(expect,
                              kobayashi_distance(disc, Point{p.coords[k]}, Point{q.coords[k]}));
        const double d = kobayashi_distance(poly, p, q);
        CHECK(d == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("boundary distances") {
    CHECK(boundary_distance(Domain::right_half_plane(), Point{Complex{0.5, 123.0}}) == 0.5);
    CHECK(boundary_distance(Domain::unit_disc(), Point{Complex{0.0, 0.0}}) == 1.0);
    CHECK(boundary_distance(Domain::unit_disc(), Point{Complex{0.6, 0.0}}) ==
          doctest::Approx(0.4).epsilon(1e-15));
    // ball gap uses the cancellation-free form
    CHECK(boundary_distance(Domain::unit_ball(2), Point{{Complex{0.6, 0.0}, Complex{0.0, 0.8}}}) ==
          doctest::Approx(0.0).epsilon(1e-15));
    // polydisc: the worst coordinate decides
    CHECK(boundary_distance(Domain::polydisc(2), Point{{Complex{0.5, 0.0}, Complex{0.0, 0.9}}}) ==
          doctest::Approx((1.0 - 0.81) / 1.9).epsilon(1e-15));
}

TEST_CASE("membership is closed at working precision") {
    const Domain disc = Domain::unit_disc();
    // one ulp of |z|^2 outside still counts as boundary
    const Point collapsed{Complex{-1.0, -1.2299519518346469e-08}};
    CHECK(contains(disc, collapsed));
    CHECK(boundary_distance(disc, collapsed) == 0.0);
    CHECK(!contains(disc, Point{Complex{1.0 + 1e-9, 0.0}}));
    CHECK(contains(Domain::right_half_plane(), Point{Complex{0.0, 5.0}}));
    CHECK(!contains(Domain::right_half_plane(), Point{Complex{-1e-9, 0.0}}));
    // distance from an interior point to a boundary-collapsed one is +inf
    const double d = kobayashi_distance(disc, Point{Complex{0.0, 0.0}}, Point{Complex{-1.0, -3.0330241711647626e-09}});
    CHECK(std::isinf(d));
    CHECK(d > 0.0);
}

TEST_CASE("domain error cases") {
    const Domain disc = Domain::unit_disc();
    CHECK(code_of([&] { (void)contains(disc, Point{{Complex{0.0, 0.0}, Complex{0.0, 0.0}}}); }) ==
          ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { (void)kobayashi_distance(disc, Point{Complex{0.0, 0.0}}, Point{Complex{2.0, 0.0}}); }) ==
          ErrorCode::PointOutsideDomain);
    CHECK(code_of([&] { (void)boundary_distance(disc, Point{Complex{2.0, 0.0}}); }) ==
          ErrorCode::PointOutsideDomain);
    CHECK(code_of([] { (void)Domain::unit_ball(0); }) == ErrorCode::NonpositiveParameter);
    CHECK(code_of([] { (void)Domain::polydisc(-3); }) == ErrorCode::NonpositiveParameter);
    CHECK(code_of([] { (void)horocycle_of(0.0); }) == ErrorCode::NonpositiveEpsilon);
    CHECK(code_of([] { (void)horocycle_of(-1.0); }) == ErrorCode::NonpositiveEpsilon);
}

TEST_CASE("horocycle parameters") {
    const Horocycle h1 = horocycle_of(0.5);
    CHECK(h1.center.real() == -1.0 / 3.0);
    CHECK(h1.center.imag() == 0.0);
    CHECK(h1.radius == 2.0 / 3.0);
    const Horocycle h2 = horocycle_of(1.0);
    CHECK(h2.center.real() == -0.5);
    CHECK(h2.radius == 0.5);
    // internally tangent to the unit circle, touching it at -1
    for (double e : {0.25, 0.5, 1.0, 2.0, 7.0}) {
        const Horocycle h = horocycle_of(e);
        CHECK(std::abs(h.center) + h.radius == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(h.center - Complex{-1.0, 0.0}) == doctest::Approx(h.radius).epsilon(1e-15));
        CHECK(h.epsilon == e);
    }
}

TEST_CASE("moebius maps") {
    const MoebiusMap cay = MoebiusMap::cayley();
    CHECK(cay.is_cayley());
    CHECK(!cay.is_identity());
    CHECK(MoebiusMap::identity().is_identity());

    // the cayley composition is a scalar multiple of the identity
    const MoebiusMap twice = cay.compose(cay);
    CHECK(twice.is_identity());
    CHECK(!twice.is_cayley());

    // inverse round trip on points
    const MoebiusMap m = MoebiusMap::make(Complex{2.0, 1.0}, Complex{0.0, -1.0}, Complex{0.5, 0.0}, Complex{1.0, 3.0});
    const MoebiusMap inv = m.inverse();
    for (int i = 0; i < 50; ++i) {
        const Complex z = random_disc_point();
        CHECK(std::abs(inv.apply(m.apply(z)) - z) <= 1e-14);
    }

    CHECK(code_of([] {
              (void)MoebiusMap::make(Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{2.0, 0.0}, Complex{4.0, 0.0});
          }) == ErrorCode::DegenerateMap);
    CHECK(code_of([&] { (void)cay.apply(Complex{-1.0, 0.0}); }) == ErrorCode::PoleInput);
    CHECK(code_of([] { (void)cayley(Complex{-1.0, 0.0}); }) == ErrorCode::PoleAtMinusOne);
}

TEST_CASE("hermitian circle transport") {
    // cayley sends the unit circle to the imaginary axis...
    const HermitianCircle axis = HermitianCircle::unit_circle().map_forward(MoebiusMap::cayley());
    CHECK(axis.is_line());
    for (double re : {0.1, -2.0, 3.5})
        CHECK(axis.distance_to(Complex{re, 0.7}) == doctest::Approx(std::fabs(re)).epsilon(1e-14));
    // ...and the imaginary axis to the unit circle
    const HermitianCircle circ = HermitianCircle::imaginary_axis().map_forward(MoebiusMap::cayley());
    CHECK(!circ.is_line());
    CHECK(circ.distance_to(Complex{0.25, 0.0}) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(HermitianCircle::unit_circle().distance_to(Complex{0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("transported domain geometry") {
    // the half-plane carried through cayley is the unit disc
    const Domain carried = Domain::transported(BaseKind::RightHalfPlane, MoebiusMap::cayley());
    const Domain disc = Domain::unit_disc();
    CHECK(carried.dimension() == 1);
    for (int i = 0; i < 100; ++i) {
        const Point a{random_disc_point(0.9)}, b{random_disc_point(0.9)};
        CHECK(contains(carried, a));
        const double dt = kobayashi_distance(carried, a, b);
        const double dd = kobayashi_distance(disc, a, b);
        CHECK(std::fabs(dt - dd) <= 1e-11 * (1.0 + dd));
        // Euclidean boundary gap agrees too: distance to the unit circle
        const double g = boundary_distance(carried, a);
        CHECK(g == doctest::Approx(1.0 - std::abs(a.z())).epsilon(1e-12));
    }
    CHECK(!contains(carried, Point{Complex{1.5, 0.0}}));

    // a pure scaling of the disc: |z| < 2, distances invariant under z -> 2z
    const MoebiusMap scale =
        MoebiusMap::make(Complex{2.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0});
    const Domain big = Domain::transported(BaseKind::UnitDisc, scale);
    const Point p{Complex{1.0, 0.0}}, q{Complex{0.0, 0.0}};
    CHECK(contains(big, p));
    CHECK(kobayashi_distance(big, q, p) == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
    CHECK(boundary_distance(big, p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(code_of([&] { (void)boundary_distance(big, Point{Complex{2.5, 0.0}}); }) ==
          ErrorCode::PointOutsideDomain);
}

TEST_CASE("domain equality") {
    CHECK(Domain::unit_disc() == Domain::unit_disc());
    CHECK(!(Domain::unit_disc() == Domain::right_half_plane()));
    CHECK(Domain::unit_ball(3) == Domain::unit_ball(3));
    CHECK(!(Domain::unit_ball(3) == Domain::unit_ball(2)));
    CHECK(!(Domain::unit_ball(2) == Domain::polydisc(2)));
    CHECK(Domain::transported(BaseKind::UnitDisc, MoebiusMap::cayley()) ==
          Domain::transported(BaseKind::UnitDisc, MoebiusMap::cayley()));
    CHECK(!(Domain::transported(BaseKind::UnitDisc, MoebiusMap::cayley()) ==
            Domain::transported(BaseKind::RightHalfPlane, MoebiusMap::cayley())));
}
