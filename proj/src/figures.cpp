#include "horolab/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "horolab/horosphere.hpp"
#include "horolab/parallels.hpp"
#include "horolab/units.hpp"

namespace horolab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool cond, const std::string& msg) {
    if (!cond) throw FigureError("figure validation failed: " + msg);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

const char* stroke_of(const std::string& style) {
    if (style == "aux") return "#888888";
    if (style == "accent") return "#1f5fbf";
    if (style == "horo") return "#b03030";
    return "#000000";
}

const char* dash_of(const std::string& style) { return style == "aux" ? "4,4" : ""; }

// Unit tangent perpendicular to t inside the H^2 tangent plane at t.base.
Vec perp_tangent(const Tangent& t, Curvature k) {
    Vec w = mcross(t.base.x / k.r, t.v);
    return w / std::sqrt(mdot(w, w));
}

struct SceneBuilder {
    Scene scene;
    Curvature k;

    void curve(std::vector<HPoint> pts, const std::string& style) {
        scene.prims.push_back(CurvePrimitive{std::move(pts), style});
    }
    void geodesic(const Geodesic& g, double s0, double s1, const std::string& style) {
        curve(sample_geodesic(g, s0, s1, 160, k), style);
    }
    void point(const HPoint& p, const std::string& label) {
        scene.prims.push_back(PointPrimitive{p, label});
    }
    void right_angle(const HPoint& at, const Vec& u, const Vec& v) {
        scene.prims.push_back(RightAngleMark{at, u, v});
    }
    void angle_arc(const HPoint& at, const Vec& u, const Vec& v, double radius = 0.18) {
        scene.prims.push_back(AngleArcMark{at, u, v, radius});
    }
};

Scene fig1(Curvature k, DiskModel proj) {
    double r = k.r;
    Geodesic l = geodesic_through(lift(-1.0 * r, -0.55 * r, k), lift(1.0 * r, -0.55 * r, k), k);
    HPoint P = lift(0.15 * r, 0.55 * r, k);
    PerpFoot f = drop_perpendicular(P, l, k);
    require(!f.degenerate, "fig1: P must be off l");
    HPoint S = f.foot;

    Tangent toward_s = initial_tangent(P, S, k);
    Geodesic m{P, perp_tangent(toward_s, k)};

    double s_foot = 0.0;
    {  // locate S on l's parametrization for sampling around it
        s_foot = distance(l.base, S, k);
        if (mdot(S.x, l.dir) < 0.0) s_foot = -s_foot;
    }
    HPoint on_l = point_at(l, s_foot + 0.9 * r, k);
    require(std::fabs(angle_at(S, P, on_l, k) - kPi / 2.0) < 1e-10, "fig1: right angle at S");
    require(std::fabs(angle_between(initial_tangent(P, S, k), Tangent{P, m.dir}) - kPi / 2.0) <
                1e-10,
            "fig1: right angle at P");
    require(classify(m, l, k).kind == RelationKind::Ultraparallel, "fig1: m must not meet l");

    SceneBuilder b{{k, proj, true, {}}, k};
    b.geodesic(l, s_foot - 2.2 * r, s_foot + 2.2 * r, "main");
    b.geodesic(m, -2.2 * r, 2.2 * r, "main");
    b.geodesic(geodesic_through(P, S, k), 0.0, distance(P, S, k), "aux");
    b.right_angle(S, tangent_at(l, s_foot, k).v, initial_tangent(S, P, k).v);
    b.right_angle(P, m.dir, toward_s.v);
    b.point(P, "P");
    b.point(S, "S");
    b.point(point_at(m, 1.6 * r, k), "R");
    b.point(point_at(l, s_foot + 1.9 * r, k), "l");
    b.point(point_at(m, -1.9 * r, k), "m");
    return b.scene;
}

Scene fig2(Curvature k, DiskModel proj) {
    double r = k.r;
    Geodesic l = geodesic_through(lift(-1.0 * r, -0.55 * r, k), lift(1.0 * r, -0.55 * r, k), k);
    HPoint P = lift(-0.35 * r, 0.5 * r, k);
    PerpFoot f = drop_perpendicular(P, l, k);
    HPoint S = f.foot;
    double s_foot = distance(l.base, S, k);
    if (mdot(S.x, l.dir) < 0.0) s_foot = -s_foot;

    HPoint B = point_at(l, s_foot + 0.7 * r, k);
    HPoint A = point_at(l, s_foot + 1.4 * r, k);
    HPoint C = point_at(l, s_foot + 2.3 * r, k);

    double ang_b = angle_at(P, S, B, k);
    double ang_a = angle_at(P, S, A, k);
    double ang_c = angle_at(P, S, C, k);
    require(ang_b < ang_a && ang_a < ang_c, "fig2: secant angles must increase outward");
    for (const HPoint* q : {&B, &A, &C}) {
        LineRelation rel = classify(geodesic_through(P, *q, k), l, k);
        require(rel.kind == RelationKind::Secant, "fig2: rays through l points must be secants");
        require(distance(*rel.intersection, *q, k) < 1e-9 * r, "fig2: witness matches the sample");
    }

    SceneBuilder b{{k, proj, true, {}}, k};
    b.geodesic(l, s_foot - 1.6 * r, s_foot + 2.8 * r, "main");
    b.geodesic(geodesic_through(P, S, k), 0.0, distance(P, S, k), "aux");
    for (const HPoint* q : {&B, &A, &C})
        b.geodesic(geodesic_through(P, *q, k), 0.0, 1.12 * distance(P, *q, k), "accent");
    b.right_angle(S, tangent_at(l, s_foot, k).v, initial_tangent(S, P, k).v);
    b.point(P, "P");
    b.point(S, "S");
    b.point(B, "B");
    b.point(A, "A");
    b.point(C, "C");
    b.point(point_at(geodesic_through(P, B, k), 0.55 * distance(P, B, k), k), "R");
    return b.scene;
}

Scene fig3(Curvature k, DiskModel proj) {
    double r = k.r;
    Geodesic l = geodesic_through(lift(-1.0 * r, -0.6 * r, k), lift(1.0 * r, -0.6 * r, k), k);
    HPoint P = lift(0.0, 0.45 * r, k);
    PerpFoot f = drop_perpendicular(P, l, k);
    double d = distance(P, f.foot, k);

    Vec u0 = initial_tangent(P, f.foot, k).v;
    Vec u1 = perp_tangent(Tangent{P, u0}, k);
    Geodesic m{P, u1};  // perpendicular to PS at P, as in fig1
    auto [left, right] = boundary_parallels(P, l, k);
    // Pick the boundary parallel on u1's side and a line strictly between it
    // and m.
    Geodesic n = (mdot(left.dir, u1) > 0.0) ? left : right;
    double theta_n = angle_between(Tangent{P, u0}, Tangent{P, n.dir});
    double theta_mid = 0.5 * (theta_n + kPi / 2.0);
    Geodesic mid{P, std::cos(theta_mid) * u0 + std::sin(theta_mid) * u1};

    require(classify(n, l, k).boundary_parallel(), "fig3: n must be a boundary parallel");
    require(classify(m, l, k).kind == RelationKind::Ultraparallel, "fig3: m must not meet l");
    require(classify(mid, l, k).kind == RelationKind::Ultraparallel,
            "fig3: lines between n and m must not meet l");
    require(std::fabs(theta_n - angle_of_parallelism(d, k)) < 1e-9,
            "fig3: boundary angle must match the closed form");

    SceneBuilder b{{k, proj, true, {}}, k};
    b.geodesic(l, -2.4 * r, 2.4 * r, "main");
    b.geodesic(m, -2.2 * r, 2.2 * r, "main");
    b.geodesic(n, -2.2 * r, 2.6 * r, "accent");
    b.geodesic(mid, -2.2 * r, 2.4 * r, "horo");
    b.geodesic(geodesic_through(P, f.foot, k), 0.0, d, "aux");
    b.point(P, "P");
    b.point(f.foot, "S");
    b.point(point_at(m, 2.0 * r, k), "m");
    b.point(point_at(n, 2.3 * r, k), "n");
    b.point(point_at(l, 2.1 * r, k), "l");
    return b.scene;
}

Scene fig4(Curvature k, DiskModel proj) {
    double r = k.r;
    HPoint P = lift(0.0, 0.85 * r, k);
    HPoint S = lift(0.0, -0.45 * r, k);
    Geodesic ps = geodesic_through(P, S, k);

    double phi = 0.62;  // angle SPA, strictly below pi/2
    Vec u0 = initial_tangent(P, S, k).v;
    Vec u1 = perp_tangent(Tangent{P, u0}, k);
    Geodesic ray{P, std::cos(phi) * u0 + std::sin(phi) * u1};
    HPoint A = point_at(ray, 1.5 * r, k);

    PerpFoot t = drop_perpendicular(A, ps, k);
    require(!t.degenerate, "fig4: T must be a proper foot");
    HPoint T = t.foot;
    require(std::fabs(angle_at(T, A, P, k) - kPi / 2.0) < 1e-10, "fig4: right angle at T");
    // The boundary angle for line AT seen from P lies strictly between the
    // secant angle SPA and pi/2.
    double alpha_at = angle_of_parallelism(distance(P, T, k), k);
    require(phi < alpha_at && alpha_at < kPi / 2.0, "fig4: alpha must lie between SPA and pi/2");
    require(classify(geodesic_through(P, A, k), geodesic_through(T, A, k), k).kind ==
                RelationKind::Secant,
            "fig4: PA must cut AT");

    SceneBuilder b{{k, proj, true, {}}, k};
    b.geodesic(ps, -0.4 * r, distance(P, S, k) + 0.5 * r, "main");
    b.geodesic(ray, 0.0, 1.9 * r, "accent");
    b.geodesic(geodesic_through(A, T, k), 0.0, distance(A, T, k), "main");
    b.right_angle(T, initial_tangent(T, A, k).v, initial_tangent(T, P, k).v);
    b.angle_arc(P, u0, ray.dir);
    b.point(P, "P");
    b.point(S, "S");
    b.point(A, "A");
    b.point(T, "T");
    return b.scene;
}

Scene fig5(Curvature k, DiskModel proj) {
    double r = k.r;
    HPoint B = lift(0.0, -0.4 * r, k);
    Vec up = initial_tangent(B, lift(0.0, 0.5 * r, k), k).v;
    Vec side = perp_tangent(Tangent{B, up}, k);

    double half = 0.42;  // half opening of angle ABC
    Geodesic ray_a{B, std::cos(half) * up + std::sin(half) * side};
    Geodesic ray_c{B, std::cos(half) * up - std::sin(half) * side};
    HPoint A = point_at(ray_a, 1.7 * r, k);
    HPoint C = point_at(ray_c, 1.7 * r, k);

    Geodesic l = line_avoiding_angle(B, A, C, k);
    require(classify(l, geodesic_through(B, A, k), k).boundary_parallel(),
            "fig5: l must be boundary parallel to side BA");
    require(classify(l, geodesic_through(B, C, k), k).boundary_parallel(),
            "fig5: l must be boundary parallel to side BC");
    for (int i = 0; i <= 200; ++i) {
        double s = -5.0 * r + i * (10.0 * r / 200.0);
        require(strictly_inside_angle(point_at(l, s, k), B, A, C, k),
                "fig5: l must stay strictly inside angle ABC");
    }

    SceneBuilder b{{k, proj, true, {}}, k};
    b.geodesic(ray_a, 0.0, 2.6 * r, "main");
    b.geodesic(ray_c, 0.0, 2.6 * r, "main");
    b.geodesic(l, -2.6 * r, 2.6 * r, "accent");
    b.angle_arc(B, ray_a.dir, ray_c.dir);
    b.point(B, "B");
    b.point(A, "A");
    b.point(C, "C");
    b.point(point_at(l, 0.0, k), "l");
    return b.scene;
}

// The two Euclidean sheaf/normal pictures, drawn in the flat chart of a
// horosphere so every line is a genuine horocycle section.  They exist for
// contrast with fig7 only.
Scene fig6(Curvature k, DiskModel proj) {
    Horosphere h{IdealPoint{Vec(1.0, 0.0, 0.6, 0.8)}, 1.0};
    Registry reg = builtin_registry(k);
    const UnitMap& circle_map = reg.lookup("CIRCLE", "EPLANE", "c");

    Scene scene{k, proj, false, {}};

    // Panel (a): a sheaf of parallel sections and their common normal.
    std::vector<HorocycleArc> sheaf_a;
    for (double x : {-0.7, -0.5, -0.3})
        sheaf_a.push_back(horocycle_section(h, {x, 0.0}, {0.0, 1.0}, -0.35, 0.35, k));
    HorocycleArc normal_a = horocycle_section(h, {-0.5, 0.0}, {1.0, 0.0}, -0.32, 0.32, k);
    for (const auto& arc : sheaf_a) {
        // normal direction is perpendicular to every member of the sheaf
        double dotp = arc.dir[0] * normal_a.dir[0] + arc.dir[1] * normal_a.dir[1];
        require(std::fabs(dotp) < 1e-12, "fig6a: normal must be perpendicular to the sheaf");
        scene.prims.push_back(
            FlatSegment{{arc.chart_point(arc.t0)[0], arc.chart_point(arc.t0)[1]},
                        {arc.chart_point(arc.t1)[0], arc.chart_point(arc.t1)[1]},
                        "main"});
    }
    scene.prims.push_back(FlatSegment{{normal_a.chart_point(normal_a.t0)[0], 0.0},
                                      {normal_a.chart_point(normal_a.t1)[0], 0.0},
                                      "accent"});

    // Panel (b): a sheaf through one point and its normal circle.
    ChartPt center{0.5, 0.0};
    for (int i = 0; i < 6; ++i) {
        double phi = kPi * i / 6.0;
        HorocycleArc ray =
            horocycle_section(h, center, {std::cos(phi), std::sin(phi)}, -0.34, 0.34, k);
        HPoint through = ray.at(0.0);
        require(distance(through, chart(h, k).embed(center), k) < 1e-12,
                "fig6b: sheaf members must pass through the center");
        scene.prims.push_back(FlatSegment{{ray.chart_point(ray.t0)[0], ray.chart_point(ray.t0)[1]},
                                          {ray.chart_point(ray.t1)[0], ray.chart_point(ray.t1)[1]},
                                          "main"});
    }
    FlatPolyline circ;
    circ.style = "accent";
    const double radius = 0.22;
    for (int i = 0; i <= 96; ++i) {
        UPoint p = circle_map.apply({2.0 * kPi * i / 96.0});
        ChartPt q{center[0] + radius * p[0], center[1] + radius * p[1]};
        double off = std::hypot(q[0] - center[0], q[1] - center[1]);
        require(std::fabs(off - radius) < 1e-12, "fig6b: circle points must be equidistant");
        circ.points.push_back({q[0], q[1]});
    }
    scene.prims.push_back(circ);
    scene.prims.push_back(FlatLabel{{-0.5, -0.45}, "(a)"});
    scene.prims.push_back(FlatLabel{{0.5, -0.45}, "(b)"});
    return scene;
}

Scene fig7(Curvature k, DiskModel proj) {
    double r = k.r;
    IdealPoint xi{Vec(1.0, 0.0, 1.0)};
    Horosphere h{xi, 1.0};
    HoroChart c = chart(h, k);

    SceneBuilder b{{k, proj, true, {}}, k};
    HorocycleArc arc = horocycle_arc(h, {-2.3 * r, 0.0}, {2.3 * r, 0.0}, k);
    std::vector<HPoint> pts;
    for (int i = 0; i <= 200; ++i) pts.push_back(arc.at(arc.t0 + i * (arc.t1 - arc.t0) / 200.0));
    b.curve(pts, "horo");

    for (double u : {-1.8, -0.9, 0.0, 0.9, 1.8}) {
        HPoint at = c.embed({u * r, 0.0});
        Geodesic g = pencil_of(xi, at, k);
        double t_at = u * r - arc.start[0];
        Vec vel = arc.velocity(t_at);
        Vec vel_hat = vel / std::sqrt(mdot(vel, vel));
        require(std::fabs(mdot(vel_hat, g.dir)) < 1e-9,
                "fig7: horocycle must be orthogonal to every pencil geodesic");
        b.geodesic(g, -1.4 * r, 3.2 * r, "main");
    }
    b.point(c.embed({0.0, 0.0}), "F");
    return b.scene;
}

Scene fig8(Curvature k, DiskModel proj) {
    double r = k.r;
    IdealPoint xi{Vec(1.0, 0.0, 1.0)};
    Horosphere outer{xi, 2.0};
    Horosphere inner{xi, 1.0};
    HoroChart oc = chart(outer, k);
    double gap = r * std::log(outer.level / inner.level);

    SceneBuilder b{{k, proj, true, {}}, k};
    for (const Horosphere* h : {&outer, &inner}) {
        HorocycleArc arc = horocycle_arc(*h, {-2.1 * r, 0.0}, {2.1 * r, 0.0}, k);
        std::vector<HPoint> pts;
        for (int i = 0; i <= 200; ++i)
            pts.push_back(arc.at(arc.t0 + i * (arc.t1 - arc.t0) / 200.0));
        b.curve(pts, "horo");
    }
    for (double u : {-1.6, -0.8, 0.0, 0.8, 1.6}) {
        HPoint at = oc.embed({u * r, 0.0});
        Geodesic g = pencil_of(xi, at, k);
        HPoint crossing = point_at(g, gap, k);
        require(horosphere_residual(inner, crossing, k) < 1e-9,
                "fig8: pencil geodesics must cross the inner horocycle at the constant gap");
        b.geodesic(g, -1.2 * r, 3.0 * r, "main");
    }
    b.point(oc.embed({0.0, 0.0}), "");
    return b.scene;
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"fig1", "fig2", "fig3", "fig4",
                                                   "fig5", "fig6", "fig7", "fig8"};
    return names;
}

std::vector<HPoint> sample_geodesic(const Geodesic& g, double s0, double s1, int n, Curvature k) {
    std::vector<HPoint> pts;
    pts.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) pts.push_back(point_at(g, s0 + i * (s1 - s0) / n, k));
    return pts;
}

Scene build_figure(const std::string& name, Curvature k, DiskModel projection) {
    check_curvature(k);
    if (name == "fig1") return fig1(k, projection);
    if (name == "fig2") return fig2(k, projection);
    if (name == "fig3") return fig3(k, projection);
    if (name == "fig4") return fig4(k, projection);
    if (name == "fig5") return fig5(k, projection);
    if (name == "fig6") return fig6(k, projection);
    if (name == "fig7") return fig7(k, projection);
    if (name == "fig8") return fig8(k, projection);
    throw std::invalid_argument("unknown figure: " + name);
}

namespace {

struct SvgWriter {
    std::ostringstream out;
    static constexpr double kSize = 800.0;
    static constexpr double kScale = 0.95 * kSize / 2.0;  // 5% margin

    static PlanarPt pix(const PlanarPt& p) {
        return {kSize / 2.0 + kScale * p.x, kSize / 2.0 - kScale * p.y};
    }

    void polyline(const std::vector<PlanarPt>& pts, const std::string& style) {
        out << "  <polyline fill=\"none\" stroke=\"" << stroke_of(style) << "\"";
        const char* dash = dash_of(style);
        if (dash[0]) out << " stroke-dasharray=\"" << dash << "\"";
        out << " stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            PlanarPt q = pix(pts[i]);
            if (i) out << ' ';
            out << fmt(q.x) << ',' << fmt(q.y);
        }
        out << "\"/>\n";
    }

    void dot(const PlanarPt& p, const std::string& label) {
        PlanarPt q = pix(p);
        out << "  <circle cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y)
            << "\" r=\"3\" fill=\"#000000\"/>\n";
        if (!label.empty())
            out << "  <text x=\"" << fmt(q.x + 8.0) << "\" y=\"" << fmt(q.y - 8.0)
                << "\" font-family=\"serif\" font-size=\"22\" font-style=\"italic\">" << label
                << "</text>\n";
    }

    void text(const PlanarPt& p, const std::string& label) {
        PlanarPt q = pix(p);
        out << "  <text x=\"" << fmt(q.x) << "\" y=\"" << fmt(q.y)
            << "\" font-family=\"serif\" font-size=\"22\" text-anchor=\"middle\">" << label
            << "</text>\n";
    }

    void boundary() {
        out << "  <circle cx=\"" << fmt(kSize / 2.0) << "\" cy=\"" << fmt(kSize / 2.0)
            << "\" r=\"" << fmt(kScale) << "\" fill=\"none\" stroke=\"#bbbbbb\" "
            << "stroke-width=\"1\"/>\n";
    }
};

}  // namespace

std::string render_svg(const Scene& scene) {
    SvgWriter w;
    w.out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
             "height=\"800\" viewBox=\"0 0 800 800\">\n"
          << "  <rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
    if (scene.draw_boundary) w.boundary();

    for (const Primitive& prim : scene.prims) {
        if (const auto* c = std::get_if<CurvePrimitive>(&prim)) {
            std::vector<PlanarPt> pts;
            pts.reserve(c->points.size());
            for (const HPoint& p : c->points) pts.push_back(to_disk(p, scene.projection, scene.k));
            w.polyline(pts, c->style);
        } else if (const auto* p = std::get_if<PointPrimitive>(&prim)) {
            w.dot(to_disk(p->at, scene.projection, scene.k), p->label);
        } else if (const auto* m = std::get_if<RightAngleMark>(&prim)) {
            double eps = 0.12 * scene.k.r;
            std::vector<PlanarPt> pts;
            Vec mid_dir = m->u + m->v;
            Geodesic gu{m->at, m->u}, gv{m->at, m->v};
            Geodesic gm = geodesic_from_direction(m->at, mid_dir, scene.k);
            pts.push_back(to_disk(point_at(gu, eps, scene.k), scene.projection, scene.k));
            pts.push_back(
                to_disk(point_at(gm, eps * 1.41421356, scene.k), scene.projection, scene.k));
            pts.push_back(to_disk(point_at(gv, eps, scene.k), scene.projection, scene.k));
            w.polyline(pts, "aux");
        } else if (const auto* a = std::get_if<AngleArcMark>(&prim)) {
            double ang = angle_between(Tangent{a->at, a->u}, Tangent{a->at, a->v});
            Vec w2 = a->v - mdot(a->v, a->u) * a->u;
            w2 = w2 / std::sqrt(mdot(w2, w2));
            std::vector<PlanarPt> pts;
            for (int i = 0; i <= 24; ++i) {
                double t = ang * i / 24.0;
                Vec dir = std::cos(t) * a->u + std::sin(t) * w2;
                pts.push_back(to_disk(point_at(Geodesic{a->at, dir}, a->radius * scene.k.r,
                                               scene.k),
                                      scene.projection, scene.k));
            }
            w.polyline(pts, "aux");
        } else if (const auto* s = std::get_if<FlatSegment>(&prim)) {
            w.polyline({s->a, s->b}, s->style);
        } else if (const auto* fp = std::get_if<FlatPolyline>(&prim)) {
            w.polyline(fp->points, fp->style);
        } else if (const auto* t = std::get_if<FlatLabel>(&prim)) {
            w.text(t->at, t->text);
        }
    }
    w.out << "</svg>\n";
    return w.out.str();
}

void write_figure(const std::string& name, const std::string& path, Curvature k,
                  DiskModel projection) {
    Scene scene = build_figure(name, k, projection);
    std::string svg = render_svg(scene);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << svg;
    if (!file.good()) throw std::runtime_error("write failed: " + path);
}

std::string parallelism_table_csv(double d_min, double d_max, int steps, Curvature k) {
    check_curvature(k);
    if (!(0.0 < d_min && d_min < d_max) || steps < 2)
        throw std::invalid_argument("parallelism_table_csv: bad range");

    HPoint o = lift(0.0, 0.0, k);
    Geodesic l{o, Vec(0.0, 1.0, 0.0)};
    Geodesic up{o, Vec(0.0, 0.0, 1.0)};

    std::ostringstream out;
    out << "d,pi_analytic,pi_oracle,abs_diff\n";
    double prev = 4.0;
    for (int i = 0; i < steps; ++i) {
        double d = d_min * std::pow(d_max / d_min, static_cast<double>(i) / (steps - 1));
        double analytic = angle_of_parallelism(d, k);
        HPoint P = point_at(up, d, k);
        double oracle = secant_boundary_oracle(P, l, 1e-8, k);
        char line[128];
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.3g\n", d, analytic, oracle,
                      std::fabs(analytic - oracle));
        out << line;
        if (!(analytic < prev))
            throw std::logic_error("parallelism_table_csv: column must decrease");
        prev = analytic;
    }
    return out.str();
}

}  // namespace horolab
