#include "test_support.hpp"

#include <arclen/oracle.hpp>

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using arclen::CurveKind;
using arclen::GeneratorSpec;
using arclen::PolygonalCurve;
using arclen::Point;
using testsupport::random_curve;
using testsupport::uniform;
using testsupport::uniform_index;

TEST(OraclePoint, Example) {
    const PolygonalCurve c({{0.0, 0.0}, {0.0, 2.0}, {4.0, 2.0}});
    const auto p = arclen::oracle_point_at_arclength(c, 3.0, 1000000);
    EXPECT_NEAR(p[0], 1.0, 1e-5);
    EXPECT_NEAR(p[1], 2.0, 1e-5);

    EXPECT_EQ(arclen::oracle_point_at_arclength(c, 0.0, 10000), c.front());
    const auto end = arclen::oracle_point_at_arclength(c, 6.0, 10000);
    EXPECT_NEAR(arclen::distance(end, c.back()), 0.0, 1e-9 * 6.0);
}

TEST(OraclePoint, Errors) {
    const PolygonalCurve c({{0.0, 0.0}, {1.0, 0.0}});
    EXPECT_THROW(arclen::oracle_point_at_arclength(c, -0.1, 10000), arclen::OutOfRange);
    EXPECT_THROW(arclen::oracle_point_at_arclength(c, 1.1, 10000), arclen::OutOfRange);
    EXPECT_THROW(arclen::oracle_point_at_arclength(c, 0.5, 0), arclen::BadSpec);
}

TEST(OraclePoint, AgreesWithTableLookup) {
    // the cheap lookup and the dense walk must match far below the walk's
    // nominal O(L/samples) resolution
    std::mt19937_64 rng(9001);
    for (int pair = 0; pair < 10000; ++pair) {
        const auto c = random_curve(rng, uniform_index(rng, 1, 4), uniform_index(rng, 2, 50));
        const auto table = arclen::arclength_table(c);
        const double s = uniform(rng, 0.0, table.total);
        const auto fast = arclen::point_at_arclength(c, table, s);
        const auto slow = arclen::oracle_point_at_arclength(c, s, 10000);
        EXPECT_LE(arclen::distance(fast, slow), 1e-9 * table.total);
    }
}

TEST(OraclePoint, HandlesZeroLengthSegments) {
    const PolygonalCurve c({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}});
    const auto p = arclen::oracle_point_at_arclength(c, 1.5, 10000);
    EXPECT_NEAR(p[0], 1.5, 1e-9);
    EXPECT_NEAR(p[1], 0.0, 1e-9);
}

TEST(OracleEquilateral, Examples) {
    EXPECT_TRUE(arclen::oracle_is_equilateral(PolygonalCurve({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}})));
    EXPECT_FALSE(
        arclen::oracle_is_equilateral(PolygonalCurve({{0.0, 0.0}, {1.0, 0.0}, {3.0, 0.0}})));
}

TEST(OracleEquilateral, AgreesWithCumulativeForm) {
    std::mt19937_64 rng(9002);
    const arclen::Tolerances tol(1e-6, 1e-12);
    for (int trial = 0; trial < 200; ++trial) {
        PolygonalCurve c = trial % 2 == 0
                               ? testsupport::random_equilateral(rng, 2, uniform_index(rng, 2, 20))
                               : random_curve(rng, uniform_index(rng, 2, 3),
                                              uniform_index(rng, 2, 30));
        EXPECT_EQ(arclen::oracle_is_equilateral(c, tol), arclen::is_equilateral(c, tol));
    }
}

TEST(Generate, Collinear) {
    GeneratorSpec spec;
    spec.kind = CurveKind::Collinear;
    spec.steps = 2;
    auto c = arclen::generate(spec);
    ASSERT_EQ(c.vertex_count(), 3u);
    EXPECT_EQ(c[0], (Point{0.0, 0.0}));
    EXPECT_EQ(c[1], (Point{1.5, 0.0}));
    EXPECT_EQ(c[2], (Point{1.0, 0.0}));

    spec.steps = 3;
    c = arclen::generate(spec);
    EXPECT_EQ(c[1], (Point{2.0, 0.0}));
    EXPECT_DOUBLE_EQ(arclen::length(c), 3.0); // L = n * d with d = 1
    EXPECT_FALSE(c.closed());
}

TEST(Generate, RegularPolygon) {
    GeneratorSpec spec;
    spec.kind = CurveKind::RegularPolygon;
    spec.sides = 4;
    spec.side = 1.0;
    const auto square = arclen::generate(spec);
    ASSERT_EQ(square.vertex_count(), 5u);
    EXPECT_TRUE(square.closed());
    EXPECT_NEAR(arclen::length(square), 4.0, 1e-12);
    EXPECT_TRUE(arclen::is_equilateral(square));

    spec.sides = 3;
    const auto triangle = arclen::generate(spec);
    EXPECT_NEAR(arclen::length(triangle), 3.0, 1e-12);
    EXPECT_TRUE(arclen::is_equilateral(triangle));
}

TEST(Generate, IsoscelesTriangle) {
    GeneratorSpec spec;
    spec.kind = CurveKind::IsoscelesTriangle;
    spec.apex_angle = 1.2;
    const auto c = arclen::generate(spec);
    ASSERT_EQ(c.vertex_count(), 4u);
    EXPECT_TRUE(c.closed());
    EXPECT_NEAR(arclen::vertex_angle(c, 0), 1.2, 1e-12);
    EXPECT_DOUBLE_EQ(arclen::distance(c[0], c[1]), 1.0);
    EXPECT_DOUBLE_EQ(arclen::distance(c[2], c[3]), 1.0);
}

TEST(Generate, Parallelogram) {
    GeneratorSpec spec;
    spec.kind = CurveKind::Parallelogram;
    spec.side_a = 2.0;
    spec.side_b = 1.0;
    spec.angle = std::numbers::pi / 3.0;
    const auto c = arclen::generate(spec);
    ASSERT_EQ(c.vertex_count(), 5u);
    EXPECT_TRUE(c.closed());
    EXPECT_NEAR(arclen::distance(c[0], c[1]), 2.0, 1e-12);
    EXPECT_NEAR(arclen::distance(c[1], c[2]), 1.0, 1e-12);
    EXPECT_NEAR(arclen::distance(c[2], c[3]), 2.0, 1e-12);
    EXPECT_NEAR(arclen::distance(c[3], c[4]), 1.0, 1e-12);
    // the requested corner angle sits at p0; its neighbor is supplementary
    EXPECT_NEAR(arclen::vertex_angle(c, 0), std::numbers::pi / 3.0, 1e-12);
    EXPECT_NEAR(arclen::vertex_angle(c, 1), 2.0 * std::numbers::pi / 3.0, 1e-12);
}

TEST(Generate, NoisyClosedBlob) {
    GeneratorSpec spec;
    spec.kind = CurveKind::NoisyClosedBlob;
    spec.points = 65;
    spec.noise = 0.1;
    spec.seed = 42;
    const auto c = arclen::generate(spec);
    ASSERT_EQ(c.vertex_count(), 66u);
    EXPECT_TRUE(c.closed());
    for (const Point& p : c.vertices()) {
        EXPECT_LE(std::abs(p[0]), 1.5);
        EXPECT_LE(std::abs(p[1]), 1.5);
    }
    // noisy enough to need smoothing
    EXPECT_GT(arclen::spacing_stats(c).sigma, 1e-3);
}

TEST(Generate, RandomWalk) {
    GeneratorSpec spec;
    spec.kind = CurveKind::RandomWalk;
    spec.dim = 3;
    spec.points = 20;
    spec.seed = 7;
    const auto c = arclen::generate(spec);
    EXPECT_EQ(c.vertex_count(), 20u);
    EXPECT_EQ(c.dim(), 3u);
    EXPECT_EQ(c[0], Point({0.0, 0.0, 0.0}));
    EXPECT_GT(arclen::length(c), 0.0);
}

TEST(Generate, BitReproducible) {
    for (const CurveKind kind : {CurveKind::RandomWalk, CurveKind::NoisyClosedBlob}) {
        GeneratorSpec spec;
        spec.kind = kind;
        spec.seed = 123456789;
        const auto a = arclen::generate(spec);
        const auto b = arclen::generate(spec);
        EXPECT_EQ(a, b);
        spec.seed = 987654321;
        EXPECT_NE(arclen::generate(spec), a);
    }
}

TEST(Generate, RejectsBadSpecs) {
    GeneratorSpec spec;
    spec.kind = CurveKind::RandomWalk;
    spec.points = 1;
    EXPECT_THROW(arclen::generate(spec), arclen::BadSpec);

    spec = GeneratorSpec{};
    spec.kind = CurveKind::RegularPolygon;
    spec.sides = 2;
    EXPECT_THROW(arclen::generate(spec), arclen::BadSpec);

    spec = GeneratorSpec{};
    spec.kind = CurveKind::IsoscelesTriangle;
    spec.apex_angle = std::numbers::pi;
    EXPECT_THROW(arclen::generate(spec), arclen::BadSpec);

    spec = GeneratorSpec{};
    spec.kind = CurveKind::Parallelogram;
    spec.side_b = 0.0;
    EXPECT_THROW(arclen::generate(spec), arclen::BadSpec);

    spec = GeneratorSpec{};
    spec.kind = CurveKind::Collinear;
    spec.steps = 0;
    EXPECT_THROW(arclen::generate(spec), arclen::BadSpec);

    spec = GeneratorSpec{};
    spec.kind = CurveKind::NoisyClosedBlob;
    spec.noise = -0.5;
    EXPECT_THROW(arclen::generate(spec), arclen::BadSpec);
}
