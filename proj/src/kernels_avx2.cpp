#if defined(DISCSEQ_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "discseq/kernels.hpp"

namespace discseq::kernels {

namespace {

// Tails use std::fma so a value does not depend on where in the array it sits:
// fma(dy, dy, dx*dx) is exactly what the fmadd lanes compute.

void disc_sinh_sq_avx2(double px, double py, const double* qx, const double* qy,
                       double* out, std::size_t n) {
    // Boundary factors clamp at 0 (|z|^2 can round one ulp past 1); 1 - nq is
    // never -0.0, so max against +0.0 is exact in both the lanes and the tail.
    const double gp = std::max(0.0, 1.0 - (px * px + py * py));
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d vgp = _mm256_set1_pd(gp);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d qxv = _mm256_loadu_pd(qx + i);
        const __m256d qyv = _mm256_loadu_pd(qy + i);
        const __m256d dx = _mm256_sub_pd(vpx, qxv);
        const __m256d dy = _mm256_sub_pd(vpy, qyv);
        const __m256d num = _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dx, dx));
        const __m256d nq = _mm256_fmadd_pd(qyv, qyv, _mm256_mul_pd(qxv, qxv));
        const __m256d gq = _mm256_max_pd(zero, _mm256_sub_pd(one, nq));
        const __m256d den = _mm256_mul_pd(vgp, gq);
        const __m256d r = _mm256_div_pd(num, den);
        const __m256d iszero = _mm256_cmp_pd(num, zero, _CMP_EQ_OQ);
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(r, zero, iszero));
    }
    for (; i < n; ++i) {
        const double dx = px - qx[i];
        const double dy = py - qy[i];
        const double num = std::fma(dy, dy, dx * dx);
        const double gq = std::max(0.0, 1.0 - std::fma(qy[i], qy[i], qx[i] * qx[i]));
        out[i] = num == 0.0 ? 0.0 : num / (gp * gq);
    }
}

void halfplane_sinh_sq_avx2(double px, double py, const double* qx, const double* qy,
                            double* out, std::size_t n) {
    // abs turns a stored -0.0 real part into +0.0 (members have Re >= 0).
    const double four_px = 4.0 * std::fabs(px);
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d vfour_px = _mm256_set1_pd(four_px);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d qxv = _mm256_loadu_pd(qx + i);
        const __m256d qyv = _mm256_loadu_pd(qy + i);
        const __m256d dx = _mm256_sub_pd(vpx, qxv);
        const __m256d dy = _mm256_sub_pd(vpy, qyv);
        const __m256d num = _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dx, dx));
        const __m256d den = _mm256_mul_pd(vfour_px, _mm256_and_pd(absmask, qxv));
        const __m256d r = _mm256_div_pd(num, den);
        const __m256d iszero = _mm256_cmp_pd(num, zero, _CMP_EQ_OQ);
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(r, zero, iszero));
    }
    for (; i < n; ++i) {
        const double dx = px - qx[i];
        const double dy = py - qy[i];
        const double num = std::fma(dy, dy, dx * dx);
        out[i] = num == 0.0 ? 0.0 : num / (four_px * std::fabs(qx[i]));
    }
}

void disc_boundary_gap_avx2(const double* x, const double* y, double* out, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d yv = _mm256_loadu_pd(y + i);
        const __m256d n2 = _mm256_fmadd_pd(yv, yv, _mm256_mul_pd(xv, xv));
        const __m256d den = _mm256_add_pd(one, _mm256_sqrt_pd(n2));
        _mm256_storeu_pd(out + i, _mm256_div_pd(_mm256_sub_pd(one, n2), den));
    }
    for (; i < n; ++i) {
        const double n2 = std::fma(y[i], y[i], x[i] * x[i]);
        out[i] = (1.0 - n2) / (1.0 + std::sqrt(n2));
    }
}

// Strict less-than updates keep the earliest index per lane; the horizontal
// fold breaks exact cross-lane ties toward the smaller index, so the result
// matches the scalar first-minimum rule bit for bit, ties included.
MinIndex min_index_avx2(const double* v, std::size_t n) {
    if (n < 4) {
        MinIndex best{v[0], 0};
        for (std::size_t i = 1; i < n; ++i)
            if (v[i] < best.value) best = MinIndex{v[i], i};
        return best;
    }
    __m256d vmin = _mm256_loadu_pd(v);
    __m256i vidx = _mm256_set_epi64x(3, 2, 1, 0);
    __m256i cur = vidx;
    const __m256i step = _mm256_set1_epi64x(4);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) {
        const __m256d val = _mm256_loadu_pd(v + i);
        cur = _mm256_add_epi64(cur, step);
        const __m256d lt = _mm256_cmp_pd(val, vmin, _CMP_LT_OQ);
        vmin = _mm256_blendv_pd(vmin, val, lt);
        vidx = _mm256_blendv_epi8(vidx, cur, _mm256_castpd_si256(lt));
    }
    alignas(32) double vals[4];
    alignas(32) long long idxs[4];
    _mm256_store_pd(vals, vmin);
    _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), vidx);
    MinIndex best{vals[0], static_cast<std::size_t>(idxs[0])};
    for (int lane = 1; lane < 4; ++lane) {
        const std::size_t idx = static_cast<std::size_t>(idxs[lane]);
        if (vals[lane] < best.value || (vals[lane] == best.value && idx < best.index))
            best = MinIndex{vals[lane], idx};
    }
    for (; i < n; ++i)
        if (v[i] < best.value) best = MinIndex{v[i], i};
    return best;
}

} // namespace

const Ops avx2_ops{disc_sinh_sq_avx2, halfplane_sinh_sq_avx2, disc_boundary_gap_avx2,
                   min_index_avx2, "avx2"};

} // namespace discseq::kernels

#endif // DISCSEQ_HAVE_AVX2
