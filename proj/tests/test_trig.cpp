#include <doctest.h>

#include <cmath>

#include "horolab/trig.hpp"

using namespace horolab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("hyperbolic identities on a synthetic isoceles right triangle") {
    Curvature k{1.0};
    // legs a = b = 1: the hypotenuse follows from cosh c = cosh(1)^2
    HPoint vc = lift(0.0, 0.0, k);
    Geodesic leg1{vc, Vec(0.0, 1.0, 0.0)};
    Geodesic leg2{vc, Vec(0.0, 0.0, 1.0)};
    HPoint va = point_at(leg1, 1.0, k);
    HPoint vb = point_at(leg2, 1.0, k);

    TriangleMeasurements t;
    t.geometry = GeometryKind::Hyperbolic;
    t.radius = 1.0;
    t.a = distance(vb, vc, k);
    t.b = distance(vc, va, k);
    t.c = distance(va, vb, k);
    t.A = angle_at(va, vb, vc, k);
    t.B = angle_at(vb, va, vc, k);
    t.C = angle_at(vc, va, vb, k);

    CHECK(t.c == doctest::Approx(1.513374006596504).epsilon(1e-12));
    CHECK(t.C == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(hyperbolic_right_residuals(t).max_abs() < 1e-10);
}

TEST_CASE("hyperbolic identities: degenerate and wrong-tag inputs") {
    TriangleMeasurements t;
    t.geometry = GeometryKind::Hyperbolic;
    t.radius = 1.0;
    // a -> 0 limit: c -> b, A -> 0, B -> pi/2
    t.a = 1e-9;
    t.b = 0.8;
    t.c = 0.8;
    t.A = 0.0;
    t.B = kPi / 2.0;
    t.C = kPi / 2.0;
    CHECK(hyperbolic_right_residuals(t).max_abs() < 1e-8);

    t.geometry = GeometryKind::Spherical;
    CHECK_THROWS_AS(hyperbolic_right_residuals(t), std::invalid_argument);
    t.geometry = GeometryKind::Hyperbolic;
    t.C = 1.0;
    CHECK_THROWS_AS(hyperbolic_right_residuals(t), std::invalid_argument);
}

TEST_CASE("Euclidean limit of the hyperbolic Pythagoras identity") {
    Rng rng(73);
    Curvature unit{1.0};
    TriangleMeasurements t = synthesize_right_triangle(rng, unit);
    double lead = (t.c * t.c - t.a * t.a - t.b * t.b) / 2.0;
    CHECK(lead > 0.0);  // hyperbolic hypotenuse beats the Euclidean one

    for (double r : {10.0, 100.0, 1000.0}) {
        TriangleMeasurements tr = t;
        tr.radius = r;
        double res = hyperbolic_right_residuals(tr).pythagoras;
        double ratio = res / (lead / (r * r));
        double slack = (r <= 10.0) ? 2e-2 : (r <= 100.0 ? 2e-4 : 2e-6);
        CHECK(std::fabs(ratio - 1.0) < slack);
    }

    double p = euclidean_limit_exponent(t, {10.0, 30.0, 100.0, 300.0});
    CHECK(p > 1.9);
    CHECK(p < 2.1);
}

TEST_CASE("spherical identities") {
    SUBCASE("shrinking triangle limit") {
        TriangleMeasurements t;
        t.geometry = GeometryKind::Spherical;
        t.radius = 1.0;
        double s = 1e-4;
        t.a = 3.0 * s;
        t.b = 4.0 * s;
        t.c = 5.0 * s;
        t.A = std::atan2(3.0, 4.0);
        t.B = std::atan2(4.0, 3.0);
        t.C = kPi / 2.0;
        CHECK(spherical_right_residuals(t).max_abs() < 1e-7);
    }

    SUBCASE("octant triangle") {
        TriangleMeasurements t;
        t.geometry = GeometryKind::Spherical;
        t.radius = 1.0;
        t.a = t.b = t.c = kPi / 2.0;
        t.A = t.B = t.C = kPi / 2.0;
        CHECK(spherical_right_residuals(t).max_abs() < 1e-10);
    }

    SUBCASE("random extrinsic sphere triangles") {
        Rng rng(79);
        for (int i = 0; i < 200; ++i) {
            TriangleMeasurements t = synthesize_spherical_right_triangle(rng, 1.0);
            CHECK(std::fabs(t.C - kPi / 2.0) < 1e-9);
            CHECK(spherical_right_residuals(t).max_abs() < 1e-10);
        }
    }

    SUBCASE("side range enforced") {
        TriangleMeasurements t;
        t.geometry = GeometryKind::Spherical;
        t.radius = 1.0;
        t.a = 4.0;
        t.b = t.c = 1.0;
        t.C = kPi / 2.0;
        CHECK_THROWS_AS(spherical_right_residuals(t), std::invalid_argument);
    }
}

TEST_CASE("imaginary substitution") {
    // cos(i*1) equals cosh(1)
    SubstitutionReport rep = imaginary_substitution_report(1.0, 1.0, 1.0, 0.3, 0.4);
    CHECK(std::cosh(1.0) == doctest::Approx(1.5430806348152437).epsilon(1e-16));
    CHECK(rep.identities[0].i_power == 0);
    CHECK(rep.identities[1].i_power == 1);
    CHECK(rep.identities[2].i_power == 1);
    CHECK(rep.identities[3].i_power == 0);

    Rng rng(83);
    for (int i = 0; i < 300; ++i) {
        double a = rng.uniform(0.1, 2.0), b = rng.uniform(0.1, 2.0), c = rng.uniform(0.1, 2.0);
        double A = rng.uniform(0.1, 1.4), B = rng.uniform(0.1, 1.4);
        SubstitutionReport r2 = imaginary_substitution_report(a, b, c, A, B);
        CHECK(r2.max_residual < 1e-12);
        for (const auto& e : r2.identities) CHECK(e.imag_leak < 1e-12);
    }
}

TEST_CASE("accordance of synthetic measurement with the identities") {
    AccordanceReport rep = accordance_check(500, {1.0}, 42);
    CHECK(rep.max_residual < 1e-9);

    AccordanceReport rep3 = accordance_check(500, {3.0}, 42);
    CHECK(rep3.max_residual < 1e-9);

    // seeded determinism
    CHECK(accordance_check(100, {1.0}, 7).to_string() ==
          accordance_check(100, {1.0}, 7).to_string());
    CHECK(accordance_check(100, {1.0}, 7).to_string() !=
          accordance_check(100, {1.0}, 8).to_string());
}

TEST_CASE("parallelism identity") {
    CHECK(parallelism_identity_check(1.0, {1.0}) < 1e-14);
    CHECK(parallelism_identity_check(1e-12, {1.0}) < 1e-14);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double d = 0.01 * std::pow(10.0 / 0.01, i / 99.0);
        worst = std::max(worst, parallelism_identity_check(d, {1.0}));
    }
    CHECK(worst < 1e-12);
}
