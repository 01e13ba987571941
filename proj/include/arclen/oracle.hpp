// Reference implementations and test-curve generators.
//
// The oracles deliberately avoid the cumulative-table lookup used by
// point_at_arclength: they walk the curve in tiny steps and accumulate
// chord lengths, so agreement between the two paths is meaningful.
// Generators are pure functions of their spec; the seed fixes every
// random draw, so outputs are bit-reproducible across runs and platforms.

#pragma once

#include "geometry.hpp"

#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

namespace arclen {

namespace detail {

// Uniform double in [0, 1) built from the top 53 bits of the engine
// output. std::uniform_real_distribution is not pinned down by the
// standard; this is.
inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [-1, 1).
inline double symmetric_real(std::mt19937_64& rng) {
    return 2.0 * unit_real(rng) - 1.0;
}

} // namespace detail

// Evaluates P(s) by walking the curve with `samples` micro-steps of the
// uniform vertex-index parameter, stopping at every vertex as well, and
// accumulating micro-chord lengths until s is reached. Linear-time and
// slow; exists to cross-check point_at_arclength.
inline Point oracle_point_at_arclength(const PolygonalCurve& c, double s, std::size_t samples,
                                       const Tolerances& tol = {}) {
    if (samples < 1)
        throw BadSpec("oracle needs at least one sample");
    const double total = length(c);
    if (s < -tol.abs || s > total + tol.abs)
        throw OutOfRange("arclength " + std::to_string(s) + " outside [0, " +
                         std::to_string(total) + "]");
    if (s <= 0.0)
        return c.front();

    const std::size_t m = c.segment_count();
    const std::size_t dim = c.dim();
    const double du = static_cast<double>(m) / static_cast<double>(samples);

    std::vector<double> prev = c.front().coords;
    std::vector<double> cur(dim);
    double acc = 0.0;

    const auto advance_to = [&](const std::vector<double>& target) -> bool {
        double step_sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double d = target[i] - prev[i];
            step_sq += d * d;
        }
        const double step = std::sqrt(step_sq);
        if (acc + step >= s && step > 0.0) {
            const double f = std::clamp((s - acc) / step, 0.0, 1.0);
            Point out;
            out.coords.resize(dim);
            for (std::size_t i = 0; i < dim; ++i)
                out.coords[i] = prev[i] + f * (target[i] - prev[i]);
            prev = out.coords;
            return true;
        }
        acc += step;
        prev = target;
        return false;
    };

    Point hit;
    for (std::size_t k = 0; k < m; ++k) {
        const Point& a = c[k];
        const Point& b = c[k + 1];
        // micro-steps at uniform parameters strictly inside (k, k+1)
        auto i = static_cast<long long>(std::floor(static_cast<double>(k) / du)) + 1;
        for (; static_cast<double>(i) * du < static_cast<double>(k + 1); ++i) {
            const double t = static_cast<double>(i) * du - static_cast<double>(k);
            if (t <= 0.0)
                continue;
            for (std::size_t j = 0; j < dim; ++j)
                cur[j] = a.coords[j] + t * (b.coords[j] - a.coords[j]);
            if (advance_to(cur))
                return Point(std::move(prev));
        }
        if (advance_to(b.coords))
            return Point(std::move(prev));
    }
    return c.back();
}

// Equilateral test on raw spacings: max - min <= rel * L + abs. Shares no
// logic with the cumulative form used by is_equilateral.
inline bool oracle_is_equilateral(const PolygonalCurve& c, const Tolerances& tol = {}) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double total = 0.0;
    for (std::size_t k = 1; k < c.vertex_count(); ++k) {
        const double d = distance(c[k - 1], c[k]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        total += d;
    }
    return hi - lo <= tol.at_scale(total);
}

enum class CurveKind {
    RandomWalk,
    RegularPolygon,
    IsoscelesTriangle,
    Parallelogram,
    Collinear,
    NoisyClosedBlob,
};

// Parameters for generate(). Each kind reads its own fields and ignores
// the rest; the defaults describe a 16-step planar random walk.
struct GeneratorSpec {
    CurveKind kind = CurveKind::RandomWalk;
    std::uint64_t seed = 0;

    std::size_t dim = 2;    // RandomWalk; the other kinds are planar
    std::size_t points = 16; // RandomWalk vertex count, NoisyClosedBlob distinct points
    double scale = 1.0;     // RandomWalk step size, NoisyClosedBlob base radius

    std::size_t sides = 3; // RegularPolygon
    double side = 1.0;     // RegularPolygon edge length

    double apex_angle = std::numbers::pi / 3.0; // IsoscelesTriangle, radians

    double side_a = 2.0;                   // Parallelogram
    double side_b = 1.0;                   // Parallelogram
    double angle = std::numbers::pi / 3.0; // Parallelogram corner angle, radians

    std::size_t steps = 2; // Collinear: equilateral after exactly this many respacings

    double noise = 0.1; // NoisyClosedBlob radial noise amplitude
};

namespace detail {

inline PolygonalCurve make_random_walk(const GeneratorSpec& spec) {
    if (spec.points < 2)
        throw BadSpec("random walk needs at least two points");
    if (spec.dim < 1)
        throw BadSpec("random walk needs dimension at least 1");
    if (!(spec.scale > 0.0))
        throw BadSpec("random walk needs a positive scale");
    std::mt19937_64 rng(spec.seed);
    std::vector<Point> v;
    v.reserve(spec.points);
    Point p;
    p.coords.assign(spec.dim, 0.0);
    v.push_back(p);
    for (std::size_t k = 1; k < spec.points; ++k) {
        for (std::size_t i = 0; i < spec.dim; ++i)
            p.coords[i] += spec.scale * symmetric_real(rng);
        v.push_back(p);
    }
    return PolygonalCurve(std::move(v), false);
}

inline PolygonalCurve make_regular_polygon(const GeneratorSpec& spec) {
    if (spec.sides < 3)
        throw BadSpec("regular polygon needs at least three sides");
    if (!(spec.side > 0.0))
        throw BadSpec("regular polygon needs a positive side length");
    const auto n = static_cast<double>(spec.sides);
    const double r = spec.side / (2.0 * std::sin(std::numbers::pi / n));
    std::vector<Point> v;
    v.reserve(spec.sides + 1);
    for (std::size_t k = 0; k < spec.sides; ++k) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
        v.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    v.push_back(v.front());
    return PolygonalCurve(std::move(v), true);
}

inline PolygonalCurve make_isosceles_triangle(const GeneratorSpec& spec) {
    if (!(spec.apex_angle > 0.0) || !(spec.apex_angle < std::numbers::pi))
        throw BadSpec("apex angle must lie in (0, pi)");
    // apex at the origin, unit legs, base parallel to the x axis
    const double h = spec.apex_angle / 2.0;
    std::vector<Point> v{{0.0, 0.0},
                         {-std::sin(h), std::cos(h)},
                         {std::sin(h), std::cos(h)},
                         {0.0, 0.0}};
    return PolygonalCurve(std::move(v), true);
}

inline PolygonalCurve make_parallelogram(const GeneratorSpec& spec) {
    if (!(spec.side_a > 0.0) || !(spec.side_b > 0.0))
        throw BadSpec("parallelogram sides must be positive");
    if (!(spec.angle > 0.0) || !(spec.angle < std::numbers::pi))
        throw BadSpec("parallelogram angle must lie in (0, pi)");
    const double bx = spec.side_b * std::cos(spec.angle);
    const double by = spec.side_b * std::sin(spec.angle);
    std::vector<Point> v{{0.0, 0.0},
                         {spec.side_a, 0.0},
                         {spec.side_a + bx, by},
                         {bx, by},
                         {0.0, 0.0}};
    return PolygonalCurve(std::move(v), true);
}

inline PolygonalCurve make_collinear(const GeneratorSpec& spec) {
    if (spec.steps < 1)
        throw BadSpec("collinear curve needs at least one step");
    const double mid = (static_cast<double>(spec.steps) + 1.0) / 2.0;
    std::vector<Point> v{{0.0, 0.0}, {mid, 0.0}, {1.0, 0.0}};
    return PolygonalCurve(std::move(v), false);
}

inline PolygonalCurve make_noisy_closed_blob(const GeneratorSpec& spec) {
    if (spec.points < 3)
        throw BadSpec("blob needs at least three points");
    if (!(spec.noise >= 0.0))
        throw BadSpec("blob noise must be nonnegative");
    if (!(spec.scale > 0.0))
        throw BadSpec("blob needs a positive scale");
    std::mt19937_64 rng(spec.seed);
    // low-frequency radius wobble; amplitudes keep the radius inside
    // scale * [0.55, 1.45] even at noise 0.1
    double amp[4], phase[4];
    for (int h = 0; h < 4; ++h) {
        amp[h] = 0.25 / static_cast<double>(h + 2) * symmetric_real(rng);
        phase[h] = 2.0 * std::numbers::pi * unit_real(rng);
    }
    std::vector<Point> v;
    v.reserve(spec.points + 1);
    for (std::size_t j = 0; j < spec.points; ++j) {
        const double phi =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(spec.points);
        double r = 1.0;
        for (int h = 0; h < 4; ++h)
            r += amp[h] * std::cos(static_cast<double>(h + 2) * phi + phase[h]);
        r += spec.noise * symmetric_real(rng);
        r *= spec.scale;
        v.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    v.push_back(v.front());
    return PolygonalCurve(std::move(v), true);
}

} // namespace detail

inline PolygonalCurve generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
    case CurveKind::RandomWalk:
        return detail::make_random_walk(spec);
    case CurveKind::RegularPolygon:
        return detail::make_regular_polygon(spec);
    case CurveKind::IsoscelesTriangle:
        return detail::make_isosceles_triangle(spec);
    case CurveKind::Parallelogram:
        return detail::make_parallelogram(spec);
    case CurveKind::Collinear:
        return detail::make_collinear(spec);
    case CurveKind::NoisyClosedBlob:
        return detail::make_noisy_closed_blob(spec);
    }
    throw BadSpec("unknown curve kind");
}

} // namespace arclen
