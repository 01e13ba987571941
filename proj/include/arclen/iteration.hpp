// Fixed-point iteration of arclength respacing, with per-step traces of
// spacing statistics, lengths, and vertex displacement.

#pragma once

#include "geometry.hpp"

#include <limits>
#include <optional>

namespace arclen {

// Statistics of the consecutive vertex spacings. sigma is the population
// standard deviation (divide by m, not m - 1).
struct SpacingStats {
    double sigma = 0.0;
    double max = 0.0;
    double min = 0.0;
    double mean = 0.0;
};

inline SpacingStats spacing_stats(const PolygonalCurve& c) {
    const std::size_t m = c.segment_count();
    std::vector<double> spacing(m);
    SpacingStats st;
    st.max = 0.0;
    st.min = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
        const double d = distance(c[k - 1], c[k]);
        spacing[k - 1] = d;
        st.max = std::max(st.max, d);
        st.min = std::min(st.min, d);
        sum += d;
    }
    st.mean = sum / static_cast<double>(m);
    double sq = 0.0;
    for (double d : spacing) {
        const double dev = d - st.mean;
        sq += dev * dev;
    }
    st.sigma = std::sqrt(sq / static_cast<double>(m));
    return st;
}

enum class StopReason {
    Displacement, // max vertex movement fell below tol_displacement
    Sigma,        // spacing sigma fell below tol_sigma
    MaxIters,     // iteration budget exhausted
    FixedPoint,   // a step moved no vertex at all
};

inline const char* to_string(StopReason r) {
    switch (r) {
    case StopReason::Displacement:
        return "Displacement";
    case StopReason::Sigma:
        return "Sigma";
    case StopReason::MaxIters:
        return "MaxIters";
    case StopReason::FixedPoint:
        return "FixedPoint";
    }
    return "?";
}

struct IterationConfig {
    std::size_t max_iters = 1000;
    double tol_displacement = 1e-12;
    double tol_sigma = 0.0; // 0 disables the sigma test
    bool record_curves = false;
};

struct IterationRecord {
    std::size_t n = 0;
    double length = 0.0;
    SpacingStats stats;
    // max vertex movement from iterate n-1 to iterate n; 0 at n = 0
    double displacement = 0.0;
    std::optional<PolygonalCurve> curve;
};

struct IterationTrace {
    std::vector<IterationRecord> records;
    StopReason stop_reason = StopReason::MaxIters;

    std::size_t iterations() const { return records.back().n; }
};

struct IterationResult {
    PolygonalCurve curve;
    IterationTrace trace;
};

inline double max_displacement(const PolygonalCurve& a, const PolygonalCurve& b) {
    double best = 0.0;
    for (std::size_t k = 0; k < a.vertex_count(); ++k)
        best = std::max(best, distance(a[k], b[k]));
    return best;
}

// Applies respace until one of the stop criteria fires, checked in the
// order FixedPoint, Displacement, Sigma, MaxIters. Record n describes
// iterate f^n(C); a step that moves nothing is not recorded, so the final
// curve is always the last record.
inline IterationResult iterate(const PolygonalCurve& start, const IterationConfig& cfg = {}) {
    if (cfg.max_iters < 1)
        throw BadSpec("max_iters must be at least 1");
    if (!(cfg.tol_displacement >= 0.0) || !(cfg.tol_sigma >= 0.0))
        throw BadSpec("iteration tolerances must be nonnegative");

    IterationTrace trace;
    PolygonalCurve cur = start;
    const auto record = [&](std::size_t n, double disp) {
        trace.records.push_back(IterationRecord{
            n, length(cur), spacing_stats(cur), disp,
            cfg.record_curves ? std::optional<PolygonalCurve>(cur) : std::nullopt});
    };
    record(0, 0.0);
    for (std::size_t n = 1; n <= cfg.max_iters; ++n) {
        PolygonalCurve next = respace(cur);
        const double disp = max_displacement(cur, next);
        if (disp == 0.0) {
            trace.stop_reason = StopReason::FixedPoint;
            return {std::move(cur), std::move(trace)};
        }
        cur = std::move(next);
        record(n, disp);
        if (disp < cfg.tol_displacement) {
            trace.stop_reason = StopReason::Displacement;
            return {std::move(cur), std::move(trace)};
        }
        if (cfg.tol_sigma > 0.0 && trace.records.back().stats.sigma < cfg.tol_sigma) {
            trace.stop_reason = StopReason::Sigma;
            return {std::move(cur), std::move(trace)};
        }
    }
    trace.stop_reason = StopReason::MaxIters;
    return {std::move(cur), std::move(trace)};
}

// Interior angle at vertex k, in [0, pi]. On a closed curve the start
// vertex uses p_{m-1} and p_1 as neighbors. Computed from unit vectors as
// 2 * atan2(|u - v|, |u + v|), which stays accurate for tiny and for
// nearly straight angles.
inline double vertex_angle(const PolygonalCurve& c, std::size_t k) {
    const std::size_t m = c.segment_count();
    std::size_t prev, next;
    if (k == 0) {
        if (!c.closed())
            throw OutOfRange("angle at the start needs a closed curve");
        prev = m - 1;
        next = 1;
    } else if (k < m) {
        prev = k - 1;
        next = k + 1;
    } else {
        throw OutOfRange("no angle at vertex " + std::to_string(k));
    }
    const double nu = distance(c[prev], c[k]);
    const double nv = distance(c[next], c[k]);
    if (nu == 0.0 || nv == 0.0)
        throw DegenerateAngle("zero-length segment at vertex " + std::to_string(k));
    double diff_sq = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        const double u = (c[prev][i] - c[k][i]) / nu;
        const double v = (c[next][i] - c[k][i]) / nv;
        diff_sq += (u - v) * (u - v);
        sum_sq += (u + v) * (u + v);
    }
    return 2.0 * std::atan2(std::sqrt(diff_sq), std::sqrt(sum_sq));
}

} // namespace arclen
