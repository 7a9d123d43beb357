#include <doctest.h>

#include <cmath>

#include "horolab/horosphere.hpp"
#include "horolab/parallels.hpp"
#include "horolab/sampling.hpp"

using namespace horolab;

namespace {
constexpr double kPi = 3.14159265358979323846;

Horosphere generic_h3(Curvature k) {
    IdealPoint xi{Vec(1.0, 1.0 / 3, 2.0 / 3, 2.0 / 3)};
    (void)k;
    return Horosphere{xi, 1.3};
}
}  // namespace

TEST_CASE("horosphere through a point") {
    Curvature k{1.0};
    HPoint p = lift(0.0, 0.0, 0.0, k);
    IdealPoint xi{Vec(1.0, 1.0, 0.0, 0.0)};
    Horosphere h = horosphere_through(p, xi, k);
    CHECK(h.level == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(horosphere_residual(h, p, k) < 1e-15);

    // membership constant over the chart grid
    HoroChart c = chart(h, k);
    for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j) {
            HPoint x = c.embed({0.6 * i, 0.6 * j});
            CHECK(horosphere_residual(h, x, k) < 1e-12);
            CHECK(sheet_residual(x, k) < 1e-9);
        }
}

TEST_CASE("chart frame and embedding") {
    Curvature k{1.0};
    Horosphere h = generic_h3(k);
    HoroChart c = chart(h, k);

    CHECK(c.chart_dim == 2);
    CHECK(horosphere_residual(h, c.base, k) < 1e-12);
    CHECK(distance(c.embed({0.0, 0.0}), c.base, k) < 1e-13);

    // frame residuals
    CHECK(std::fabs(-mdot(c.base.x, c.xi_hat) - k.r * k.r) < 1e-12);
    for (int i = 0; i < 2; ++i) {
        CHECK(std::fabs(mdot(c.frame[i], c.frame[i]) - 1.0) < 1e-12);
        CHECK(std::fabs(mdot(c.frame[i], c.base.x)) < 1e-12);
        CHECK(std::fabs(mdot(c.frame[i], c.xi_hat)) < 1e-12);
    }
    CHECK(std::fabs(mdot(c.frame[0], c.frame[1])) < 1e-12);

    // 11 x 11 grid on [-3,3]^2 stays on the sheet
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j)
            CHECK(sheet_residual(c.embed({-3.0 + 0.6 * i, -3.0 + 0.6 * j}), k) < 1e-9);

    // coords inverts embed
    Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        ChartPt u{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        ChartPt v = c.coords(c.embed(u));
        CHECK(std::fabs(u[0] - v[0]) < 1e-10);
        CHECK(std::fabs(u[1] - v[1]) < 1e-10);
    }

    CHECK_THROWS_AS(c.coords(lift(5.0, 5.0, 5.0, k)), std::invalid_argument);
}

TEST_CASE("chart gauge changes are isometries") {
    Curvature k{1.0};
    Horosphere h = generic_h3(k);
    HoroChart c1 = chart(h, k);
    Rng rng(47);
    HPoint other_base = c1.embed({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    HoroChart c2 = chart_at(h, other_base, k);
    for (int i = 0; i < 30; ++i) {
        HPoint x = c1.embed({rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)});
        HPoint y = c1.embed({rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)});
        ChartPt a1 = c1.coords(x), b1 = c1.coords(y);
        ChartPt a2 = c2.coords(x), b2 = c2.coords(y);
        double d1 = std::hypot(a1[0] - b1[0], a1[1] - b1[1]);
        double d2 = std::hypot(a2[0] - b2[0], a2[1] - b2[1]);
        CHECK(std::fabs(d1 - d2) < 1e-10);
    }
}

TEST_CASE("intrinsic distance: flat chart, independent path oracle") {
    Curvature k{1.0};
    Horosphere h = generic_h3(k);
    HoroChart c = chart(h, k);

    HPoint p = c.embed({0.0, 0.0});
    CHECK(intrinsic_distance(h, p, p, k) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(intrinsic_distance(h, c.embed({0.0, 0.0}), c.embed({3.0, 4.0}), k) ==
          doctest::Approx(5.0).epsilon(1e-12));

    Rng rng(53);
    for (int i = 0; i < 40; ++i) {
        ChartPt u{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        ChartPt v{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        HPoint x = c.embed(u), y = c.embed(v);
        double closed = intrinsic_distance(h, x, y, k);
        if (closed <  0.1) continue;
        double oracle = discretized_path_length(h, x, y, k);
        CHECK(std::fabs(closed - oracle) / closed < 1e-5);
    }

    CHECK_THROWS_AS(intrinsic_distance(h, lift(3.0, 0.0, 0.0, k), p, k), std::invalid_argument);
}

TEST_CASE("horocycle sections") {
    Curvature k{1.0};
    Horosphere h = generic_h3(k);
    HoroChart c = chart(h, k);

    // two chart lines through one chart point meet in exactly one surface point
    HorocycleArc s1 = horocycle_section(h, {0.4, -0.2}, {1.0, 0.0}, -3.0, 3.0, k);
    HorocycleArc s2 = horocycle_section(h, {0.4, -0.2}, {0.3, 1.0}, -3.0, 3.0, k);
    CHECK(distance(s1.at(0.0), s2.at(0.0), k) < 1e-12);
    int close_pairs = 0;
    for (int i = -30; i <= 30; ++i)
        for (int j = -30; j <= 30; ++j)
            if (distance(s1.at(0.1 * i), s2.at(0.1 * j), k) < 1e-6) ++close_pairs;
    CHECK(close_pairs == 1);

    // the section spans a single 3-flat containing xi
    std::vector<Vec> span;
    for (int i = -4; i <= 4; ++i) span.push_back(s1.at(0.7 * i).x);
    CHECK(span_rank(span) == 3);
    span.push_back(h.xi.xi);
    CHECK(span_rank(span) == 3);

    // a generic sample cloud of the surface is genuinely 4-dimensional
    std::vector<Vec> cloud;
    Rng rng(59);
    for (int i = 0; i < 12; ++i)
        cloud.push_back(c.embed({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}).x);
    CHECK(span_rank(cloud) == 4);

    // arc length between two of its points equals the chart distance
    HPoint a = s1.at(-1.3), b = s1.at(2.1);
    CHECK(intrinsic_distance(h, a, b, k) == doctest::Approx(3.4).epsilon(1e-10));

    CHECK_THROWS_AS(horocycle_section(h, {0.0, 0.0}, {0.0, 0.0}, -1.0, 1.0, k),
                    std::invalid_argument);
}

TEST_CASE("AP verification on the horosphere") {
    Curvature k{1.0};
    Horosphere h = generic_h3(k);

    APReport rep = verify_AP(h, 200, 4242, k);
    CHECK(rep.samples == 200);
    CHECK(rep.failures == 0);
    CHECK(rep.min_parallel_separation > 1e-6);
    CHECK(rep.max_intersection_gap < 1e-9);

    CHECK_THROWS_AS(verify_AP(h, 0, 1, k), std::invalid_argument);

    // H^2 horocycles have no plane geometry to verify
    Horosphere h2{IdealPoint{Vec(1.0, 0.0, 1.0)}, 1.0};
    CHECK_THROWS_AS(verify_AP(h2, 10, 1, k), std::invalid_argument);
}

TEST_CASE("horospherical triangles obey Euclidean relations") {
    Curvature k{1.0};
    Horosphere h = generic_h3(k);

    SUBCASE("right isoceles with legs 1,1") {
        TriangleCheck tc = euclidean_triangle_check(h, {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, k);
        CHECK(tc.sides[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));  // opposite v1
        CHECK(tc.sides[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(tc.sides[2] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(tc.angles[2] == doctest::Approx(kPi / 2.0).epsilon(1e-12));
        CHECK(tc.angle_sum < 1e-9);
        CHECK(tc.law_of_cosines < 1e-9);
    }

    SUBCASE("needle triangles are rejected") {
        CHECK_THROWS_AS(euclidean_triangle_check(h, {0.0, 0.0}, {1.0, 0.0}, {2.0, 1e-7}, k),
                        std::invalid_argument);
    }

    SUBCASE("ambient geodesic triangle on the same vertices shows the defect") {
        ChartPt u1{0.0, 0.0}, u2{1.2, 0.1}, u3{0.3, 1.4};
        TriangleCheck tc = euclidean_triangle_check(h, u1, u2, u3, k);
        CHECK(tc.angle_sum < 1e-10);
        double ambient = ambient_triangle_angle_sum(h, u1, u2, u3, k);
        CHECK(ambient < kPi - 1e-3);
    }

    SUBCASE("random triangles") {
        Rng rng(61);
        int done = 0;
        while (done < 60) {
            ChartPt u1{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
            ChartPt u2{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
            ChartPt u3{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
            double area = 0.5 * std::fabs((u2[0] - u1[0]) * (u3[1] - u1[1]) -
                                          (u2[1] - u1[1]) * (u3[0] - u1[0]));
            if (area < 0.05) continue;
            ++done;
            TriangleCheck tc = euclidean_triangle_check(h, u1, u2, u3, k);
            CHECK(tc.law_of_cosines < 1e-8);
            CHECK(tc.angle_sum < 1e-8);
        }
    }
}

TEST_CASE("surface normals follow the pencil (finite differences)") {
    Curvature k{1.0};
    Horosphere h = generic_h3(k);
    HoroChart c = chart(h, k);
    Rng rng(67);
    const double step = 1e-5;
    for (int i = 0; i < 20; ++i) {
        ChartPt u{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        HPoint x = c.embed(u);
        Geodesic pencil = pencil_of(h.xi, x, k);
        for (int axis = 0; axis < 2; ++axis) {
            ChartPt up = u, dn = u;
            up[axis] += step;
            dn[axis] -= step;
            Vec fd = (c.embed(up).x - c.embed(dn).x) / (2.0 * step);
            double cosdev = mdot(fd, pencil.dir) / std::sqrt(mdot(fd, fd));
            CHECK(std::fabs(cosdev) < 1e-9);
        }
    }
}

TEST_CASE("H^2 horocycle: 1-D chart specialization") {
    Curvature k{1.0};
    Horosphere h{IdealPoint{Vec(1.0, 0.6, 0.8)}, 0.9};
    HoroChart c = chart(h, k);
    CHECK(c.chart_dim == 1);

    Rng rng(71);
    for (int i = 0; i < 25; ++i) {
        ChartPt u{rng.uniform(-4.0, 4.0), 0.0};
        ChartPt v{rng.uniform(-4.0, 4.0), 0.0};
        HPoint x = c.embed(u), y = c.embed(v);
        CHECK(horosphere_residual(h, x, k) < 1e-12);
        double closed = intrinsic_distance(h, x, y, k);
        CHECK(closed == doctest::Approx(std::fabs(u[0] - v[0])).epsilon(1e-10));
        if (closed > 0.1)
            CHECK(std::fabs(closed - discretized_path_length(h, x, y, k)) / closed < 1e-5);
    }

    // concentric horocycles stay a constant pencil-distance apart
    Horosphere inner{h.xi, 0.45};
    double gap = k.r * std::log(h.level / inner.level);
    for (int i = -3; i <= 3; ++i) {
        HPoint x = c.embed({0.9 * i, 0.0});
        Geodesic g = pencil_of(h.xi, x, k);
        CHECK(horosphere_residual(inner, point_at(g, gap, k), k) < 1e-9);
    }
}
