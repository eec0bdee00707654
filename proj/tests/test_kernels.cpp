#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "discseq/domain.hpp"
#include "discseq/kernels.hpp"

using namespace discseq;

namespace {

struct XY {
    std::vector<double> x, y;
};

XY random_disc_batch(std::mt19937_64& rng, std::size_t n, double rmax = 0.98) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    XY b;
    b.x.reserve(n);
    b.y.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = rmax * std::sqrt(u(rng));
        const double t = 2.0 * M_PI * u(rng);
        b.x.push_back(r * std::cos(t));
        b.y.push_back(r * std::sin(t));
    }
    return b;
}

XY random_halfplane_batch(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> ux(0.01, 50.0), uy(-50.0, 50.0);
    XY b;
    b.x.reserve(n);
    b.y.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.x.push_back(ux(rng));
        b.y.push_back(uy(rng));
    }
    return b;
}

bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

} // namespace

TEST_CASE("batch kernels agree with the point-pair distance") {
    std::mt19937_64 rng(42);
    const Domain disc = Domain::unit_disc();
    const Domain hp = Domain::right_half_plane();
    const auto& ops = kernels::scalar_ops;

    const XY dq = random_disc_batch(rng, 64);
    std::vector<double> out(64);
    ops.disc_sinh_sq(0.3, -0.1, dq.x.data(), dq.y.data(), out.data(), 64);
    for (std::size_t i = 0; i < 64; ++i) {
        const double d = kobayashi_distance(disc, Point{Complex{0.3, -0.1}}, Point{Complex{dq.x[i], dq.y[i]}});
        const double s = std::sinh(d);
        CHECK(close_rel(out[i], s * s, 1e-12));
    }

    const XY hq = random_halfplane_batch(rng, 64);
    ops.halfplane_sinh_sq(2.0, 1.5, hq.x.data(), hq.y.data(), out.data(), 64);
    for (std::size_t i = 0; i < 64; ++i) {
        const double d = kobayashi_distance(hp, Point{Complex{2.0, 1.5}}, Point{Complex{hq.x[i], hq.y[i]}});
        const double s = std::sinh(d);
        CHECK(close_rel(out[i], s * s, 1e-12));
    }
}

TEST_CASE("batch boundary gap matches the scalar gap") {
    std::mt19937_64 rng(7);
    const Domain disc = Domain::unit_disc();
    XY b = random_disc_batch(rng, 33);
    b.x.push_back(1.5); // outside: gap must come back negative
    b.y.push_back(0.0);
    std::vector<double> out(b.x.size());
    kernels::scalar_ops.disc_boundary_gap(b.x.data(), b.y.data(), out.data(), b.x.size());
    for (std::size_t i = 0; i + 1 < b.x.size(); ++i) {
        // bitwise against the documented formula; the domain-level gap rounds
        // |z| through hypot and may differ in the last ulp
        const double n2 = b.x[i] * b.x[i] + b.y[i] * b.y[i];
        CHECK(out[i] == (1.0 - n2) / (1.0 + std::sqrt(n2)));
        const double g = signed_boundary_gap(disc, Point{Complex{b.x[i], b.y[i]}});
        CHECK(close_rel(out[i], g, 1e-15));
    }
    CHECK(out.back() < 0.0);
}

TEST_CASE("self-distance masks to exact zero") {
    const double qx[3] = {0.25, 0.5, 0.25};
    const double qy[3] = {-0.125, 0.0, -0.125};
    double out[3];
    kernels::scalar_ops.disc_sinh_sq(0.25, -0.125, qx, qy, out, 3);
    CHECK(out[0] == 0.0);
    CHECK(out[1] > 0.0);
    CHECK(out[2] == 0.0);
    kernels::scalar_ops.halfplane_sinh_sq(0.25, -0.125, qx, qy, out, 3);
    CHECK(out[0] == 0.0);
    CHECK(out[2] == 0.0);
}

TEST_CASE("min_index returns the first minimum") {
    const auto& ops = kernels::scalar_ops;
    const double a[1] = {3.0};
    CHECK(ops.min_index(a, 1).index == 0);
    CHECK(ops.min_index(a, 1).value == 3.0);

    const double ties[9] = {5.0, 2.0, 7.0, 2.0, 2.0, 9.0, 2.0, 8.0, 6.0};
    const auto m = ops.min_index(ties, 9);
    CHECK(m.value == 2.0);
    CHECK(m.index == 1);

    // minimum in the scalar tail after the last full lane group
    const double tail[10] = {5.0, 4.0, 7.0, 3.0, 2.5, 9.0, 2.2, 8.0, 6.0, 1.0};
    CHECK(ops.min_index(tail, 10).index == 9);
}

#if defined(DISCSEQ_HAVE_AVX2)
TEST_CASE("vector backend matches scalar bit for bit") {
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 not available on this machine; skipping");
        return;
    }
    std::mt19937_64 rng(1234);
    const auto& s = kernels::scalar_ops;
    const auto& v = kernels::avx2_ops;
    CHECK(std::string(s.name) == "scalar");
    CHECK(std::string(v.name) == "avx2");

    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4},
                          std::size_t{5}, std::size_t{7}, std::size_t{8}, std::size_t{101},
                          std::size_t{1024}}) {
        const XY dq = random_disc_batch(rng, n);
        std::vector<double> so(n), vo(n);
        s.disc_sinh_sq(0.4, 0.2, dq.x.data(), dq.y.data(), so.data(), n);
        v.disc_sinh_sq(0.4, 0.2, dq.x.data(), dq.y.data(), vo.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(close_rel(so[i], vo[i], 1e-13));

        const XY hq = random_halfplane_batch(rng, n);
        s.halfplane_sinh_sq(3.0, -2.0, hq.x.data(), hq.y.data(), so.data(), n);
        v.halfplane_sinh_sq(3.0, -2.0, hq.x.data(), hq.y.data(), vo.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(close_rel(so[i], vo[i], 1e-13));

        s.disc_boundary_gap(dq.x.data(), dq.y.data(), so.data(), n);
        v.disc_boundary_gap(dq.x.data(), dq.y.data(), vo.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(close_rel(so[i], vo[i], 1e-13));

        // the min reduction must agree exactly, index included
        std::uniform_real_distribution<double> u(0.0, 100.0);
        std::vector<double> vals(n);
        for (auto& x : vals) x = u(rng);
        const auto ms = s.min_index(vals.data(), n);
        const auto mv = v.min_index(vals.data(), n);
        CHECK(ms.value == mv.value);
        CHECK(ms.index == mv.index);
    }

    // crafted ties across lane boundaries: first occurrence wins in both
    std::vector<double> ties(23, 5.0);
    for (std::size_t at : {std::size_t{0}, std::size_t{3}, std::size_t{4}, std::size_t{7},
                           std::size_t{8}, std::size_t{15}, std::size_t{16}, std::size_t{22}}) {
        std::vector<double> w = ties;
        w[at] = 1.0;
        w[22] = std::min(w[22], 1.0); // duplicate minimum in the tail
        const auto ms = kernels::scalar_ops.min_index(w.data(), w.size());
        const auto mv = kernels::avx2_ops.min_index(w.data(), w.size());
        CHECK(ms.index == std::min(at, std::size_t{22}));
        CHECK(mv.index == ms.index);
        CHECK(mv.value == ms.value);
    }
}
#endif

TEST_CASE("backend selection") {
    kernels::select("scalar");
    CHECK(std::string(kernels::active().name) == "scalar");
    if (kernels::avx2_available()) {
        kernels::select("avx2");
        CHECK(std::string(kernels::active().name) == "avx2");
    }
    CHECK_THROWS_AS(kernels::select("sse9"), std::runtime_error);
    kernels::select("auto");
    if (kernels::avx2_available())
        CHECK(std::string(kernels::active().name) == "avx2");
    else
        CHECK(std::string(kernels::active().name) == "scalar");
}
