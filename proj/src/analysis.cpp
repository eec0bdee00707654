#include "discseq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "discseq/error.hpp"
#include "discseq/kernels.hpp"

namespace discseq {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::ConvergedNumerically: return "converged-numerically";
    case Verdict::DivergingLinearly: return "diverging-linearly";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

SeparationReport separation_constant(const PointSequence& seq) {
    const std::size_t n = seq.points.size();
    if (n < 2) raise(ErrorCode::TooFewPoints, "separation needs at least two points");

    std::size_t bi = 0, bj = 1;
    if (seq.domain.is_unit_disc() || seq.domain.is_right_half_plane()) {
        // Batch kernels reduce on sinh^2(distance); the map to the distance is
        // monotone, so the argmin is exact and only the winning pair pays the
        // transcendental below.
        std::vector<double> qx(n), qy(n), scratch(n);
        for (std::size_t i = 0; i < n; ++i) {
            qx[i] = seq.points[i].z().real();
            qy[i] = seq.points[i].z().imag();
        }
        const auto& ops = kernels::active();
        const auto kernel = seq.domain.is_unit_disc() ? ops.disc_sinh_sq : ops.halfplane_sinh_sq;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const std::size_t m = n - 1 - i;
            kernel(qx[i], qy[i], qx.data() + i + 1, qy.data() + i + 1, scratch.data(), m);
            const kernels::MinIndex mi = ops.min_index(scratch.data(), m);
            if (mi.value < best) {
                best = mi.value;
                bi = i;
                bj = i + 1 + mi.index;
            }
        }
    } else {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = kobayashi_distance(seq.domain, seq.points[i], seq.points[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
    }
    // Report the distance through the public evaluator so callers can
    // reproduce the number exactly.
    const double d = kobayashi_distance(seq.domain, seq.points[bi], seq.points[bj]);
    return SeparationReport{d, bi, bj, n};
}

// Shared slack for "separated at delta": a recomputed distance may land a few
// ulps under a nominal delta, and the discreteness test and the partition must
// agree on which side such a pair falls.
constexpr double kSeparationSlack = 1e-12;

bool is_uniformly_discrete(const PointSequence& seq, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        raise(ErrorCode::NonpositiveParameter, "delta must be positive and finite");
    if (seq.points.size() < 2) return true;
    return separation_constant(seq).min_distance >= delta - kSeparationSlack;
}

Partition partition_into_discrete(const PointSequence& seq, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        raise(ErrorCode::NonpositiveParameter, "delta must be positive and finite");
    const std::size_t n = seq.points.size();
    Partition part;
    part.delta = delta;
    if (n == 0) return part;

    // Conflict graph: edge iff distance < delta - slack (a pair exactly at
    // delta is already separated, and the slack keeps the edge rule consistent
    // with is_uniformly_discrete on the resulting classes).
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (kobayashi_distance(seq.domain, seq.points[i], seq.points[j]) < delta - kSeparationSlack) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    // Greedy smallest-available color in index order; class count stays within
    // 1 + max conflict degree.
    std::vector<int> color(n, -1);
    int n_colors = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<char> used(static_cast<std::size_t>(n_colors) + 1, 0);
        for (std::size_t u : adj[v])
            if (color[u] >= 0) used[static_cast<std::size_t>(color[u])] = 1;
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        color[v] = c;
        n_colors = std::max(n_colors, c + 1);
    }
    part.classes.assign(static_cast<std::size_t>(n_colors), {});
    for (std::size_t v = 0; v < n; ++v)
        part.classes[static_cast<std::size_t>(color[v])].push_back(v);

    // Re-verify every class pairwise; a failure here is a bug, not bad input.
    for (const auto& cls : part.classes)
        for (std::size_t a = 0; a + 1 < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                if (kobayashi_distance(seq.domain, seq.points[cls[a]], seq.points[cls[b]]) <
                    delta - kSeparationSlack)
                    throw std::logic_error("partition class failed separation re-verification");
    return part;
}

double WeightFunction::operator()(double x) const { return std::pow(x, s); }

bool weight_admissible(const WeightFunction& h) {
    if (h.family != WeightFunction::Family::Power)
        raise(ErrorCode::UnsupportedFamily, "only power weights x^s are built in");
    // sum over m of (1/m)^s is the p-series: converges exactly when s > 1.
    return h.s > 1.0;
}

namespace {

struct LinearFit {
    double slope = 0.0;
    double rel_residual = 0.0;
};

LinearFit fit_partials(const std::vector<double>& y) {
    const std::size_t n = y.size();
    LinearFit fit;
    if (n < 2) return fit;
    const double mean_x = static_cast<double>(n - 1) / 2.0;
    double mean_y = 0.0;
    for (double v : y) mean_y += v;
    mean_y /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = static_cast<double>(i) - mean_x;
        sxy += dx * (y[i] - mean_y);
        sxx += dx * dx;
    }
    fit.slope = sxy / sxx;
    const double intercept = mean_y - fit.slope * mean_x;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - (intercept + fit.slope * static_cast<double>(i));
        rss += e * e;
    }
    const double spread = y.back() - y.front();
    fit.rel_residual = spread > 0.0 ? std::sqrt(rss / static_cast<double>(n)) / spread : 0.0;
    return fit;
}

} // namespace

VerdictResult assess_convergence(const std::vector<double>& partials) {
    VerdictResult out;
    const std::size_t n = partials.size();
    if (n == 0) return out;
    std::vector<double> inc;
    inc.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) inc.push_back(partials[i] - partials[i - 1]);
    if (!inc.empty()) out.diagnostics.last_increment = inc.back();
    out.diagnostics.linear_fit_slope = fit_partials(partials).slope;
    if (n < 21) return out; // too short to call either way

    const std::size_t K = 20;
    const double* w = inc.data() + (inc.size() - K);

    bool all_zero = true;
    for (std::size_t i = 0; i < K; ++i)
        if (w[i] != 0.0) all_zero = false;
    if (all_zero) {
        // the accumulation has numerically stopped moving
        out.verdict = Verdict::ConvergedNumerically;
        return out;
    }

    // Converged: the tail increments decay with every consecutive ratio below
    // one and the geometric tail bound is negligible against the sum so far.
    double ratio = 0.0;
    bool decaying = true;
    for (std::size_t i = 0; i + 1 < K; ++i) {
        if (w[i] > 0.0)
            ratio = std::max(ratio, w[i + 1] / w[i]);
        else if (w[i + 1] > 0.0)
            decaying = false; // a dead stretch followed by a new increment
    }
    out.diagnostics.increment_ratio = ratio;
    if (decaying && ratio < 1.0) {
        const double tail_bound = w[K - 1] * ratio / (1.0 - ratio);
        if (tail_bound < 1e-9 * partials.back()) {
            out.verdict = Verdict::ConvergedNumerically;
            return out;
        }
    }

    // Diverging linearly: the tail increments sit on a positive floor (min
    // comparable to the median increment) and that floor extrapolates to at
    // least half the accumulated mass; slowly decaying series like increments
    // 1/j pass the first gate but fail the second.
    double mn = w[0];
    for (std::size_t i = 1; i < K; ++i) mn = std::min(mn, w[i]);
    if (mn > 0.0) {
        std::vector<double> sorted(inc);
        std::sort(sorted.begin(), sorted.end());
        const std::size_t m = sorted.size();
        const double median = m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
        const double total = partials.back() - partials.front();
        if (median > 0.0 && mn / median > 0.5 && static_cast<double>(m) * mn >= 0.5 * total) {
            out.verdict = Verdict::DivergingLinearly;
            return out;
        }
    }
    return out;
}

Verdict convergence_verdict(const std::vector<double>& partial_sums) {
    for (std::size_t i = 1; i < partial_sums.size(); ++i)
        if (partial_sums[i] < partial_sums[i - 1])
            raise(ErrorCode::NonpositiveParameter, "partial sums must be nondecreasing");
    if (partial_sums.size() < 21)
        raise(ErrorCode::TooFewTerms, "verdict needs at least 21 partial sums (20 increments)");
    return assess_convergence(partial_sums).verdict;
}

SumReport sum_terms(std::vector<double> terms) {
    for (double t : terms)
        if (!(t >= 0.0) || !std::isfinite(t))
            raise(ErrorCode::NonpositiveParameter, "terms must be nonnegative and finite");

    SumReport rep;
    rep.partial_sums.reserve(terms.size());
    // Neumaier compensation in index order; reported partials are clamped
    // nondecreasing (the correction can wobble below a previous report by a
    // rounding quantum even though the true sums never decrease).
    double sum = 0.0, comp = 0.0;
    for (double t : terms) {
        const double next = sum + t;
        if (std::fabs(sum) >= std::fabs(t))
            comp += (sum - next) + t;
        else
            comp += (t - next) + sum;
        sum = next;
        double p = sum + comp;
        if (!rep.partial_sums.empty() && p < rep.partial_sums.back()) p = rep.partial_sums.back();
        rep.partial_sums.push_back(p);
    }
    rep.terms = std::move(terms);
    const VerdictResult vr = assess_convergence(rep.partial_sums);
    rep.verdict = vr.verdict;
    rep.diagnostics = vr.diagnostics;
    return rep;
}

SumReport theorem_sum(const PointSequence& seq, double p_exponent, const WeightFunction& h) {
    if (!(h.s > 0.0) || !std::isfinite(h.s))
        raise(ErrorCode::NonincreasingWeight, "power weight needs s > 0 to be increasing");
    if (!(p_exponent > 0.0) || !std::isfinite(p_exponent))
        raise(ErrorCode::NonpositiveParameter, "boundary-distance exponent must be positive");

    std::vector<double> dists(seq.points.size());
    std::vector<double> terms(seq.points.size());
    for (std::size_t j = 0; j < seq.points.size(); ++j) {
        const double d = boundary_distance(seq.domain, seq.points[j]);
        if (!(d < 1.0))
            raise(ErrorCode::BoundaryDistanceNotLessThanOne,
                  "point index " + std::to_string(j) + " has boundary distance >= 1");
        dists[j] = d;
        // d = 0 follows the limit cleanly: pow(0,p)=0, -1/log(0) = +0, h(+0)=0.
        terms[j] = std::pow(d, p_exponent) * h(-1.0 / std::log(d));
    }
    SumReport rep = sum_terms(std::move(terms));
    rep.boundary_distances = std::move(dists);
    return rep;
}

SumReport carleson_mass(const PointSequence& seq, int n_dim) {
    if (n_dim < 1) raise(ErrorCode::NonpositiveParameter, "dimension exponent must be >= 1");
    std::vector<double> dists(seq.points.size());
    std::vector<double> terms(seq.points.size());
    for (std::size_t j = 0; j < seq.points.size(); ++j) {
        dists[j] = boundary_distance(seq.domain, seq.points[j]);
        terms[j] = std::pow(dists[j], static_cast<double>(n_dim) + 1.0);
    }
    SumReport rep = sum_terms(std::move(terms));
    rep.boundary_distances = std::move(dists);
    return rep;
}

SumReport divergence_sum(const PointSequence& seq, const WeightFunction& F) {
    if (!(F.s > 0.0) || !std::isfinite(F.s))
        raise(ErrorCode::NonincreasingWeight, "power weight needs s > 0 to be increasing and positive");
    std::vector<double> dists(seq.points.size());
    std::vector<double> terms(seq.points.size());
    for (std::size_t j = 0; j < seq.points.size(); ++j) {
        dists[j] = boundary_distance(seq.domain, seq.points[j]);
        terms[j] = F(dists[j]);
    }
    SumReport rep = sum_terms(std::move(terms));
    rep.boundary_distances = std::move(dists);
    // For sums over D_c-style sequences the growth is exactly linear; a clean
    // positive fit upgrades the verdict even below the generic length gate.
    if (rep.partial_sums.size() >= 2) {
        const LinearFit fit = fit_partials(rep.partial_sums);
        if (fit.slope > 0.0 && fit.rel_residual < 1e-6) rep.verdict = Verdict::DivergingLinearly;
    }
    return rep;
}

} // namespace discseq
