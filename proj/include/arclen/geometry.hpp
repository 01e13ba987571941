// Polygonal curves, arclength parameterization, and arclength respacing.
//
// A polygonal curve is the linear interpolation of an ordered vertex list
// p_0 ... p_m in R^n. All operations here are pure functions of their
// arguments; values are immutable after construction and safe to share
// between threads.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arclen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRange : Error {
    using Error::Error;
};
struct BadSampleSchedule : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct DegenerateAngle : Error {
    using Error::Error;
};
struct BadSpec : Error {
    using Error::Error;
};
struct UnsupportedDimension : Error {
    using Error::Error;
};

// Endpoints closer than this (per coordinate) count as coincident when
// deciding whether a curve is closed.
inline constexpr double kClosedTol = 1e-12;

// Slack for geometric comparisons is rel * (curve length scale) + abs.
struct Tolerances {
    double rel = 1e-9;
    double abs = 1e-12;

    Tolerances() = default;
    Tolerances(double rel_, double abs_) : rel(rel_), abs(abs_) {
        if (!(rel >= 0.0) || !(abs >= 0.0))
            throw Error("tolerances must be nonnegative");
        if (rel == 0.0 && abs == 0.0)
            throw Error("tolerances must not both be zero");
    }

    double at_scale(double scale) const { return rel * scale + abs; }
};

struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }

    bool operator==(const Point&) const = default;
};

inline double distance(const Point& a, const Point& b) {
    double sq = 0.0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        const double d = a.coords[i] - b.coords[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

// a + t * (b - a), exact at t = 0; t is clamped to [0, 1] so rounding can
// never push a sample outside its segment.
inline Point lerp(const Point& a, const Point& b, double t) {
    t = std::clamp(t, 0.0, 1.0);
    Point out;
    out.coords.resize(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords[i] = a.coords[i] + t * (b.coords[i] - a.coords[i]);
    return out;
}

class PolygonalCurve {
  public:
    PolygonalCurve(std::vector<Point> vertices, bool closed = false)
        : vertices_(std::move(vertices)), closed_(closed) {
        if (vertices_.size() < 2)
            throw Error("polygonal curve needs at least two vertices");
        const std::size_t d = vertices_.front().dim();
        if (d == 0)
            throw Error("vertex dimension must be at least 1");
        for (const Point& p : vertices_) {
            if (p.dim() != d)
                throw DimensionMismatch("vertices must share one dimension");
            for (double c : p.coords)
                if (!std::isfinite(c))
                    throw Error("vertex coordinates must be finite");
        }
        if (closed_ && !coincident(vertices_.front(), vertices_.back()))
            throw Error("closed curve must end where it starts");
    }

    // Sets the closed flag from the coordinates alone.
    static PolygonalCurve inferring_closed(std::vector<Point> vertices) {
        bool closed = vertices.size() >= 2 &&
                      vertices.front().dim() == vertices.back().dim() &&
                      coincident(vertices.front(), vertices.back());
        return PolygonalCurve(std::move(vertices), closed);
    }

    static bool coincident(const Point& a, const Point& b) {
        if (a.dim() != b.dim())
            return false;
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (std::abs(a[i] - b[i]) > kClosedTol)
                return false;
        return true;
    }

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    // m, the number of line segments
    std::size_t segment_count() const { return vertices_.size() - 1; }
    std::size_t dim() const { return vertices_.front().dim(); }
    bool closed() const { return closed_; }

    const Point& operator[](std::size_t k) const { return vertices_[k]; }
    const Point& front() const { return vertices_.front(); }
    const Point& back() const { return vertices_.back(); }

    bool operator==(const PolygonalCurve&) const = default;

  private:
    std::vector<Point> vertices_;
    bool closed_ = false;
};

// L(C) = sum of segment lengths, accumulated in vertex order.
inline double length(const PolygonalCurve& c) {
    double total = 0.0;
    for (std::size_t k = 1; k < c.vertex_count(); ++k)
        total += distance(c[k - 1], c[k]);
    return total;
}

// Cumulative arclengths d_0 = 0 <= d_1 <= ... <= d_m = L(C). Zero-length
// segments show up as plateaus.
struct ArclengthTable {
    std::vector<double> cumulative;
    double total = 0.0;
};

inline ArclengthTable arclength_table(const PolygonalCurve& c) {
    ArclengthTable table;
    table.cumulative.resize(c.vertex_count());
    table.cumulative[0] = 0.0;
    double acc = 0.0;
    for (std::size_t k = 1; k < c.vertex_count(); ++k) {
        acc += distance(c[k - 1], c[k]);
        table.cumulative[k] = acc;
    }
    table.total = acc;
    return table;
}

// Evaluates the arclength parameterization P(s) for 0 <= s <= L(C).
// The endpoints are returned without arithmetic. Interior lookups find the
// last vertex index with cumulative <= s, which skips plateaus left by
// zero-length segments, then interpolate within that segment.
inline Point point_at_arclength(const PolygonalCurve& c, const ArclengthTable& table, double s,
                                const Tolerances& tol = {}) {
    if (s < -tol.abs || s > table.total + tol.abs)
        throw OutOfRange("arclength " + std::to_string(s) + " outside [0, " +
                         std::to_string(table.total) + "]");
    if (s <= 0.0)
        return c.front();
    if (s >= table.total)
        return c.back();
    const auto& d = table.cumulative;
    const auto it = std::upper_bound(d.begin(), d.end(), s);
    const auto k = static_cast<std::size_t>(it - d.begin());
    // d[k-1] <= s < d[k], so the segment has positive length.
    const double t = (s - d[k - 1]) / (d[k] - d[k - 1]);
    return lerp(c[k - 1], c[k], t);
}

inline Point point_at_arclength(const PolygonalCurve& c, double s, const Tolerances& tol = {}) {
    return point_at_arclength(c, arclength_table(c), s, tol);
}

// Arclength respacing f(C): the curve with the same vertex count whose
// vertices sit at arclengths k * L(C) / m along C. The endpoints are kept
// bit-exact. A zero-length curve is its own respacing.
inline PolygonalCurve respace(const PolygonalCurve& c) {
    const ArclengthTable table = arclength_table(c);
    if (table.total == 0.0)
        return c;
    const std::size_t m = c.segment_count();
    const double delta = table.total / static_cast<double>(m);
    std::vector<Point> out;
    out.reserve(m + 1);
    out.push_back(c.front());
    for (std::size_t k = 1; k < m; ++k)
        out.push_back(point_at_arclength(c, table, static_cast<double>(k) * delta));
    out.push_back(c.back());
    return PolygonalCurve(std::move(out), c.closed());
}

// Oriented resampling: vertices q_k = P(s_k) for a nondecreasing schedule
// that starts at 0 and ends at L(C). The sample count may differ from the
// vertex count of C.
inline PolygonalCurve resample(const PolygonalCurve& c, std::span<const double> s_values,
                               const Tolerances& tol = {}) {
    if (s_values.size() < 2)
        throw BadSampleSchedule("schedule needs at least two samples");
    const ArclengthTable table = arclength_table(c);
    const double slack = tol.at_scale(table.total);
    if (std::abs(s_values.front()) > slack)
        throw BadSampleSchedule("schedule must start at arclength 0");
    if (std::abs(s_values.back() - table.total) > slack)
        throw BadSampleSchedule("schedule must end at the curve length");
    for (std::size_t i = 1; i < s_values.size(); ++i)
        if (s_values[i] + slack < s_values[i - 1])
            throw BadSampleSchedule("schedule must be nondecreasing");

    std::vector<Point> out;
    out.reserve(s_values.size());
    out.push_back(c.front());
    for (std::size_t i = 1; i + 1 < s_values.size(); ++i) {
        const double s = std::clamp(s_values[i], 0.0, table.total);
        out.push_back(point_at_arclength(c, table, s, tol));
    }
    out.push_back(c.back());
    return PolygonalCurve(std::move(out), c.closed());
}

inline PolygonalCurve resample(const PolygonalCurve& c, const std::vector<double>& s_values,
                               const Tolerances& tol = {}) {
    return resample(c, std::span<const double>(s_values), tol);
}

// Respacing with a caller-chosen spacing delta instead of L/m. The output
// has floor(L/delta)+1 vertices (never fewer than two); the final vertex is
// pinned to p_m.
inline PolygonalCurve respace_with_spacing(const PolygonalCurve& c, double delta) {
    if (!(delta > 0.0))
        throw BadSpec("spacing must be positive");
    const ArclengthTable table = arclength_table(c);
    if (table.total == 0.0)
        return c;
    const auto count =
        std::max<std::size_t>(static_cast<std::size_t>(std::floor(table.total / delta)) + 1, 2);
    std::vector<Point> out;
    out.reserve(count);
    out.push_back(c.front());
    for (std::size_t k = 1; k + 1 < count; ++k)
        out.push_back(point_at_arclength(c, table, static_cast<double>(k) * delta));
    out.push_back(c.back());
    return PolygonalCurve(std::move(out), c.closed());
}

namespace detail {

// Distance from p to the closed segment [a, b].
inline double segment_distance(const Point& p, const Point& a, const Point& b) {
    double seg_sq = 0.0, along = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double d = b[i] - a[i];
        seg_sq += d * d;
        along += (p[i] - a[i]) * d;
    }
    if (seg_sq == 0.0)
        return distance(p, a);
    const double t = std::clamp(along / seg_sq, 0.0, 1.0);
    double sq = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double d = p[i] - (a[i] + t * (b[i] - a[i]));
        sq += d * d;
    }
    return std::sqrt(sq);
}

} // namespace detail

// Indices of the basic vertices: p_0 always; an interior vertex iff it
// differs from its predecessor and does not lie on the segment joining its
// neighbors; p_m iff it differs from p_{m-1}.
inline std::vector<std::size_t> basic_vertex_indices(const PolygonalCurve& c,
                                                     const Tolerances& tol = {}) {
    const double slack = tol.at_scale(length(c));
    const std::size_t m = c.segment_count();
    std::vector<std::size_t> out{0};
    for (std::size_t k = 1; k < m; ++k) {
        if (distance(c[k], c[k - 1]) <= slack)
            continue;
        if (detail::segment_distance(c[k], c[k - 1], c[k + 1]) <= slack)
            continue;
        out.push_back(k);
    }
    if (distance(c[m], c[m - 1]) > slack)
        out.push_back(m);
    return out;
}

// Curves are similar when their ordered basic-vertex sequences match
// pairwise within rel * max(L(C), L(D)) + abs.
inline bool similar(const PolygonalCurve& c, const PolygonalCurve& d, const Tolerances& tol = {}) {
    if (c.dim() != d.dim())
        throw DimensionMismatch("curves must share one dimension");
    const auto bc = basic_vertex_indices(c, tol);
    const auto bd = basic_vertex_indices(d, tol);
    if (bc.size() != bd.size())
        return false;
    const double slack = tol.at_scale(std::max(length(c), length(d)));
    for (std::size_t i = 0; i < bc.size(); ++i)
        if (distance(c[bc[i]], d[bd[i]]) > slack)
            return false;
    return true;
}

// Cumulative test: equilateral iff k * L(C) / m matches d_k for every k.
// A zero-length curve counts as equilateral (all spacings are zero).
inline bool is_equilateral(const PolygonalCurve& c, const Tolerances& tol = {}) {
    const ArclengthTable table = arclength_table(c);
    if (table.total == 0.0)
        return true;
    const std::size_t m = c.segment_count();
    const double slack = tol.at_scale(table.total);
    for (std::size_t k = 1; k <= m; ++k) {
        const double even = static_cast<double>(k) * table.total / static_cast<double>(m);
        if (std::abs(even - table.cumulative[k]) > slack)
            return false;
    }
    return true;
}

} // namespace arclen
