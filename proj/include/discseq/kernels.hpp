#pragma once

#include <cstddef>

namespace discseq::kernels {

struct MinIndex {
    double value;
    std::size_t index; // first index attaining the minimum
};

/// Batch kernels for the data-parallel inner loops. Both distance kernels
/// return sinh^2 of the hyperbolic distance of one point against many:
///   disc:       |p - q|^2 / ((1 - |p|^2)(1 - |q|^2))
///   half-plane: |p - q|^2 / (4 Re(p) Re(q))
/// so dist = asinh(sqrt(out[i])). The map to the distance is strictly
/// monotone, which lets min-reductions and threshold tests (x >= sinh^2 delta)
/// run on the raw kernel values with a single transcendental at the end.
struct Ops {
    /// out[i] = sinh^2 d_disc(p, q_i); 0 when p == q_i exactly.
    void (*disc_sinh_sq)(double px, double py, const double* qx, const double* qy,
                         double* out, std::size_t n);

    /// out[i] = sinh^2 d_halfplane(p, q_i); 0 when p == q_i exactly.
    void (*halfplane_sinh_sq)(double px, double py, const double* qx, const double* qy,
                              double* out, std::size_t n);

    /// out[i] = (1 - (x_i^2 + y_i^2)) / (1 + sqrt(x_i^2 + y_i^2)), the signed
    /// Euclidean gap to the unit circle (negative outside).
    void (*disc_boundary_gap)(const double* x, const double* y, double* out, std::size_t n);

    /// First minimum of v[0..n); n must be positive; inputs must be NaN-free.
    MinIndex (*min_index)(const double* v, std::size_t n);

    const char* name;
};

/// The backend picked at startup (AVX2 when the CPU supports it, else scalar).
const Ops& active();

/// Force a backend: "scalar", "avx2", or "auto". Throws std::runtime_error
/// for an unknown or unavailable backend. Intended for tests and benchmarks.
void select(const char* name);

extern const Ops scalar_ops;
#if defined(DISCSEQ_HAVE_AVX2)
extern const Ops avx2_ops;
#endif
bool avx2_available();

} // namespace discseq::kernels
