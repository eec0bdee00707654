#include <algorithm>
#include <cmath>
#include <cstddef>

#include "discseq/kernels.hpp"

namespace discseq::kernels {

namespace {

void disc_sinh_sq_scalar(double px, double py, const double* qx, const double* qy,
                         double* out, std::size_t n) {
    // Boundary factors are clamped at 0: |z|^2 rounding one ulp past 1 must
    // read as "on the boundary" (+inf result), never as a negative value that
    // would masquerade as the minimum.
    const double gp = std::max(0.0, 1.0 - (px * px + py * py));
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = px - qx[i];
        const double dy = py - qy[i];
        const double num = dx * dx + dy * dy;
        const double gq = std::max(0.0, 1.0 - (qx[i] * qx[i] + qy[i] * qy[i]));
        out[i] = num == 0.0 ? 0.0 : num / (gp * gq);
    }
}

void halfplane_sinh_sq_scalar(double px, double py, const double* qx, const double* qy,
                              double* out, std::size_t n) {
    // fabs turns a stored -0.0 real part into +0.0 (members have Re >= 0).
    const double four_px = 4.0 * std::fabs(px);
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = px - qx[i];
        const double dy = py - qy[i];
        const double num = dx * dx + dy * dy;
        out[i] = num == 0.0 ? 0.0 : num / (four_px * std::fabs(qx[i]));
    }
}

void disc_boundary_gap_scalar(const double* x, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double n2 = x[i] * x[i] + y[i] * y[i];
        out[i] = (1.0 - n2) / (1.0 + std::sqrt(n2));
    }
}

MinIndex min_index_scalar(const double* v, std::size_t n) {
    MinIndex best{v[0], 0};
    for (std::size_t i = 1; i < n; ++i) {
        if (v[i] < best.value) {
            best.value = v[i];
            best.index = i;
        }
    }
    return best;
}

} // namespace

const Ops scalar_ops{disc_sinh_sq_scalar, halfplane_sinh_sq_scalar, disc_boundary_gap_scalar,
                     min_index_scalar, "scalar"};

} // namespace discseq::kernels
