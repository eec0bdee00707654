#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "discseq/sequences.hpp"

namespace discseq {

struct SeparationReport {
    double min_distance = 0.0;
    std::size_t argmin_i = 0; // argmin_i < argmin_j
    std::size_t argmin_j = 0;
    std::size_t count = 0;    // number of points scanned
};

/// Minimum pairwise Kobayashi distance with the attaining pair. Exact O(N^2)
/// scan; a monotone-ratio prune skips the final atanh/asinh on non-minimal
/// pairs but never changes the result. TooFewPoints if N < 2.
SeparationReport separation_constant(const PointSequence& seq);

/// True iff every pairwise distance is >= delta - 1e-12. Vacuously true for
/// fewer than two points. NonpositiveParameter if delta <= 0.
bool is_uniformly_discrete(const PointSequence& seq, double delta);

struct Partition {
    std::vector<std::vector<std::size_t>> classes; // index lists, partitioning 0..N-1
    double delta = 0.0;
};

/// Conflict graph (edge iff distance < delta - 1e-12, the same slack the
/// discreteness test applies) colored greedily in index order with the
/// smallest available color. Each class passes is_uniformly_discrete at delta;
/// class count <= 1 + max conflict degree. NonpositiveParameter if delta <= 0.
Partition partition_into_discrete(const PointSequence& seq, double delta);

/// Increasing weight h(x) = x^s on (0, 1]. Only the power family exists; the
/// enum is the seam where file/CLI parsing rejects unknown families.
struct WeightFunction {
    enum class Family { Power };
    Family family = Family::Power;
    double s = 1.0;

    static WeightFunction power(double s) { return WeightFunction{Family::Power, s}; }
    double operator()(double x) const;
};

/// True iff sum over m of h(1/m) converges; exact for powers (s > 1), no
/// numerics involved. UnsupportedFamily for anything but the power family.
bool weight_admissible(const WeightFunction& h);

enum class Verdict {
    ConvergedNumerically,
    DivergingLinearly,
    Inconclusive,
};

const char* verdict_name(Verdict v); // "converged-numerically" etc.

struct Diagnostics {
    double last_increment = 0.0;
    double increment_ratio = 0.0;  // max consecutive increment ratio over the tail window
    double linear_fit_slope = 0.0; // least-squares slope of partial sums vs index
};

struct SumReport {
    std::vector<double> terms;
    std::vector<double> partial_sums;        // compensated, clamped nondecreasing
    std::vector<double> boundary_distances;  // empty for bare term tables
    Verdict verdict = Verdict::Inconclusive;
    Diagnostics diagnostics;
};

/// term_j = d_j^p * h(-1/log d_j) with d_j the Euclidean boundary distance.
/// Every d_j must be < 1 (BoundaryDistanceNotLessThanOne names the first
/// offender). NonincreasingWeight if s <= 0; NonpositiveParameter if p <= 0.
SumReport theorem_sum(const PointSequence& seq, double p_exponent, const WeightFunction& h);

/// term_j = d_j^(n_dim + 1). NonpositiveParameter if n_dim < 1.
SumReport carleson_mass(const PointSequence& seq, int n_dim);

/// term_j = F(d_j) with F increasing and positive on positives
/// (NonincreasingWeight if s <= 0). When a positive linear fit of the partial
/// sums holds with relative residual < 1e-6 the verdict is diverging-linearly.
SumReport divergence_sum(const PointSequence& seq, const WeightFunction& F);

/// Shared summation machinery: compensated accumulation of nonnegative terms in
/// index order, verdict heuristics, diagnostics. Used by all sums and by the
/// CLI's raw term-table path.
SumReport sum_terms(std::vector<double> terms);

/// Heuristic verdict over nondecreasing partial sums; requires at least 21
/// entries (TooFewTerms). Converged-numerically: the last 20 increments decay
/// with max consecutive ratio r < 1 and geometric tail bound
/// last_increment * r / (1 - r) < 1e-9 * current_sum. Diverging-linearly: the
/// last-20 increments have a positive floor consistent with linear growth
/// (min/median ratio > 0.5 and window-floor extrapolation covering half the
/// accumulated mass). Otherwise inconclusive. Outputs label it heuristic.
Verdict convergence_verdict(const std::vector<double>& partial_sums);

/// Same heuristics without the length gate: short inputs are inconclusive.
struct VerdictResult {
    Verdict verdict = Verdict::Inconclusive;
    Diagnostics diagnostics;
};
VerdictResult assess_convergence(const std::vector<double>& partial_sums);

} // namespace discseq
