#include "horolab/horosphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "horolab/sampling.hpp"

namespace horolab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double cross2(const ChartPt& a, const ChartPt& b) { return a[0] * b[1] - a[1] * b[0]; }

ChartPt sub(const ChartPt& a, const ChartPt& b) { return {a[0] - b[0], a[1] - b[1]}; }

double norm2(const ChartPt& a) { return std::hypot(a[0], a[1]); }

void check_on_surface(const Horosphere& h, const HPoint& x, Curvature k, const char* who) {
    if (horosphere_residual(h, x, k) > 1e-6 * std::max(1.0, h.level))
        throw std::invalid_argument(std::string(who) + ": point off the horosphere");
}

}  // namespace

Horosphere horosphere_through(const HPoint& p, const IdealPoint& xi, Curvature k) {
    check_curvature(k);
    return Horosphere{xi, -mdot(p.x, xi.xi) / k.r};
}

double horosphere_residual(const Horosphere& h, const HPoint& x, Curvature k) {
    return std::fabs(-mdot(x.x, h.xi.xi) - h.level * k.r) / k.r;
}

HPoint HoroChart::embed(const ChartPt& u) const {
    double r2 = k.r * k.r;
    Vec x = base.x;
    double uu = 0.0;
    for (int i = 0; i < chart_dim; ++i) {
        x = x + u[static_cast<std::size_t>(i)] * frame[static_cast<std::size_t>(i)];
        uu += u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
    }
    x = x + (uu / (2.0 * r2)) * xi_hat;
    return HPoint{x};
}

ChartPt HoroChart::coords(const HPoint& x) const {
    check_on_surface(h, x, k, "HoroChart::coords");
    ChartPt u{0.0, 0.0};
    for (int i = 0; i < chart_dim; ++i)
        u[static_cast<std::size_t>(i)] = mdot(x.x, frame[static_cast<std::size_t>(i)]);
    return u;
}

Vec HoroChart::velocity(const ChartPt& at, const ChartPt& dir, double t) const {
    double r2 = k.r * k.r;
    Vec v;
    v.n = base.x.n;
    double ud = 0.0;
    for (int i = 0; i < chart_dim; ++i) {
        v = v + dir[static_cast<std::size_t>(i)] * frame[static_cast<std::size_t>(i)];
        ud += (at[static_cast<std::size_t>(i)] + t * dir[static_cast<std::size_t>(i)]) *
              dir[static_cast<std::size_t>(i)];
    }
    return v + (ud / r2) * xi_hat;
}

ChartPt HorocycleArc::chart_point(double t) const {
    return {start[0] + t * dir[0], start[1] + t * dir[1]};
}

HPoint HorocycleArc::at(double t) const { return chart.embed(chart_point(t)); }

Vec HorocycleArc::velocity(double t) const { return chart.velocity(start, dir, t); }

HoroChart chart(const Horosphere& h, Curvature k) {
    check_curvature(k);
    if (!(h.level > 0.0)) throw std::invalid_argument("chart: horosphere level must be positive");
    // Base point: where the geodesic from the model origin toward xi crosses
    // the level set.  Along that geodesic the level decays as exp(-t/r), so
    // the crossing has the closed form below.
    double s = h.level;
    Vec origin;
    origin.n = h.xi.xi.n;
    origin[0] = k.r;
    Vec p = s * origin + (k.r * (1.0 / s - s) / 2.0) * h.xi.xi;
    return chart_at(h, HPoint{p}, k);
}

HoroChart chart_at(const Horosphere& h, const HPoint& base_on_h, Curvature k) {
    check_curvature(k);
    check_on_surface(h, base_on_h, k, "chart_at");
    HoroChart c;
    c.h = h;
    c.k = k;
    c.base = base_on_h;
    c.xi_hat = (k.r / h.level) * h.xi.xi;
    c.chart_dim = base_on_h.x.n - 2;

    // Orthogonal basis of span{base, xi_hat}: base (timelike) and
    // z = xi_hat - base (spacelike, norm r).  The complement is positive
    // definite, so Gram-Schmidt is stable.
    double r2 = k.r * k.r;
    Vec z = c.xi_hat - c.base.x;
    int found = 0;
    for (int axis = 1; axis <= base_on_h.x.n && found < c.chart_dim; ++axis) {
        Vec e;
        e.n = base_on_h.x.n;
        e[axis % base_on_h.x.n] = 1.0;
        Vec u = e + (mdot(e, c.base.x) / r2) * c.base.x - (mdot(e, z) / r2) * z;
        for (int j = 0; j < found; ++j)
            u = u - mdot(u, c.frame[static_cast<std::size_t>(j)]) *
                        c.frame[static_cast<std::size_t>(j)];
        double nn = mdot(u, u);
        if (nn > 1e-12) c.frame[static_cast<std::size_t>(found++)] = u / std::sqrt(nn);
    }
    if (found != c.chart_dim) throw std::logic_error("chart_at: frame construction failed");
    return c;
}

double intrinsic_distance(const Horosphere& h, const HPoint& x, const HPoint& y, Curvature k) {
    HoroChart c = chart(h, k);
    ChartPt ux = c.coords(x);
    ChartPt uy = c.coords(y);
    return norm2(sub(ux, uy));
}

double discretized_path_length(const Horosphere& h, const HPoint& x, const HPoint& y,
                               Curvature k) {
    HoroChart c = chart(h, k);
    ChartPt ux = c.coords(x);
    ChartPt uy = c.coords(y);
    auto chord_sum = [&](int segments) {
        double len = 0.0;
        HPoint prev = x;
        for (int i = 1; i <= segments; ++i) {
            double t = static_cast<double>(i) / segments;
            ChartPt u{ux[0] + t * (uy[0] - ux[0]), ux[1] + t * (uy[1] - ux[1])};
            HPoint next = c.embed(u);
            len += distance(prev, next, k);
            prev = next;
        }
        return len;
    };
    double l64 = chord_sum(64), l128 = chord_sum(128), l256 = chord_sum(256);
    double r1 = (4.0 * l128 - l64) / 3.0;
    double r2 = (4.0 * l256 - l128) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

HorocycleArc horocycle_section(const Horosphere& h, const ChartPt& point, const ChartPt& dir,
                               double t0, double t1, Curvature k) {
    double nn = norm2(dir);
    if (!(nn > 0.0)) throw std::invalid_argument("horocycle_section: zero direction");
    HoroChart c = chart(h, k);
    if (c.chart_dim != 2)
        throw std::invalid_argument("horocycle_section: requires a horosphere in H^3");
    return HorocycleArc{c, point, {dir[0] / nn, dir[1] / nn}, t0, t1};
}

HorocycleArc horocycle_arc(const Horosphere& h, const ChartPt& from, const ChartPt& to,
                           Curvature k) {
    ChartPt d = sub(to, from);
    double nn = norm2(d);
    if (!(nn > 0.0)) throw std::invalid_argument("horocycle_arc: coincident endpoints");
    return HorocycleArc{chart(h, k), from, {d[0] / nn, d[1] / nn}, 0.0, nn};
}

int span_rank(const std::vector<Vec>& vs, double tol) {
    std::vector<Vec> basis;
    for (Vec u : vs) {
        double scale = std::max(sup_norm(u), 1e-300);
        u = u / scale;
        for (const Vec& b : basis) {
            double dot = 0.0;
            for (int i = 0; i < u.n; ++i) dot += u[i] * b[i];
            u = u - dot * b;
        }
        double nn = 0.0;
        for (int i = 0; i < u.n; ++i) nn += u[i] * u[i];
        if (std::sqrt(nn) > tol) basis.push_back(u / std::sqrt(nn));
    }
    return static_cast<int>(basis.size());
}

APReport verify_AP(const Horosphere& h, int samples, std::uint64_t seed, Curvature k) {
    if (samples < 1) throw std::invalid_argument("verify_AP: samples must be >= 1");
    HoroChart c = chart(h, k);
    if (c.chart_dim != 2) throw std::invalid_argument("verify_AP: requires a horosphere in H^3");

    Rng rng(seed);
    APReport rep;
    rep.samples = samples;
    rep.min_parallel_separation = std::numeric_limits<double>::infinity();

    const double perturbations[] = {1e-3, -1e-3, 0.3, -0.3, 0.9, -0.9, 1.3, -1.3};

    for (int it = 0; it < samples; ++it) {
        ChartPt a{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        double phi = rng.uniform(0.0, 2.0 * kPi);
        ChartPt dL{std::cos(phi), std::sin(phi)};

        ChartPt p{};
        double offset = 0.0;
        do {
            p = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
            offset = std::fabs(cross2(sub(p, a), dL));
        } while (offset < 0.1);

        int non_meeting = 0;

        // The parallel candidate: no chart solution; verify the embedded
        // curves stay separated.
        double min_sep = std::numeric_limits<double>::infinity();
        for (int i = -30; i <= 30; ++i) {
            double t = i / 5.0;
            ChartPt on_p{p[0] + t * dL[0], p[1] + t * dL[1]};
            double proj = (on_p[0] - a[0]) * dL[0] + (on_p[1] - a[1]) * dL[1];
            ChartPt on_l{a[0] + proj * dL[0], a[1] + proj * dL[1]};
            min_sep = std::min(min_sep, distance(c.embed(on_p), c.embed(on_l), k));
        }
        if (min_sep > 1e-6 * k.r)
            ++non_meeting;
        else
            ++rep.failures;
        rep.min_parallel_separation = std::min(rep.min_parallel_separation, min_sep);

        // Perturbed candidates must all cross; confirm each crossing on the
        // embedded curves.
        for (double delta : perturbations) {
            ChartPt d{std::cos(phi + delta), std::sin(phi + delta)};
            double denom = cross2(d, dL);
            if (std::fabs(denom) < 1e-15) {
                ++non_meeting;
                continue;
            }
            double t1 = cross2(sub(a, p), dL) / denom;
            ChartPt hit{p[0] + t1 * d[0], p[1] + t1 * d[1]};
            double proj = (hit[0] - a[0]) * dL[0] + (hit[1] - a[1]) * dL[1];
            ChartPt hit_l{a[0] + proj * dL[0], a[1] + proj * dL[1]};
            double gap = distance(c.embed(hit), c.embed(hit_l), k);
            rep.max_intersection_gap = std::max(rep.max_intersection_gap, gap);
            if (gap > 1e-9 * k.r) {
                ++rep.failures;
                ++non_meeting;  // a candidate that should cross but did not
            }
        }

        if (non_meeting != 1) ++rep.failures;
    }
    return rep;
}

TriangleCheck euclidean_triangle_check(const Horosphere& h, const ChartPt& u1, const ChartPt& u2,
                                       const ChartPt& u3, Curvature k) {
    HoroChart c = chart(h, k);
    if (c.chart_dim != 2)
        throw std::invalid_argument("euclidean_triangle_check: requires a horosphere in H^3");
    double area = 0.5 * std::fabs(cross2(sub(u2, u1), sub(u3, u1)));
    if (area <= 1e-6)
        throw std::invalid_argument("euclidean_triangle_check: degenerate chart triangle");

    const ChartPt us[3] = {u1, u2, u3};
    HPoint vs[3] = {c.embed(u1), c.embed(u2), c.embed(u3)};

    TriangleCheck out;
    out.sides = {intrinsic_distance(h, vs[1], vs[2], k), intrinsic_distance(h, vs[2], vs[0], k),
                 intrinsic_distance(h, vs[0], vs[1], k)};

    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, l = (i + 2) % 3;
        ChartPt dj = sub(us[j], us[i]);
        ChartPt dl = sub(us[l], us[i]);
        double nj = norm2(dj), nl = norm2(dl);
        Vec tj = c.velocity(us[i], {dj[0] / nj, dj[1] / nj}, 0.0);
        Vec tl = c.velocity(us[i], {dl[0] / nl, dl[1] / nl}, 0.0);
        double cosang = mdot(tj, tl) / std::sqrt(mdot(tj, tj) * mdot(tl, tl));
        out.angles[static_cast<std::size_t>(i)] = std::acos(std::clamp(cosang, -1.0, 1.0));
    }

    double a = out.sides[0], b = out.sides[1], cc = out.sides[2];
    double C = out.angles[2];
    out.law_of_cosines = std::fabs(cc * cc - a * a - b * b + 2.0 * a * b * std::cos(C));
    out.angle_sum = std::fabs(out.angles[0] + out.angles[1] + out.angles[2] - kPi);
    return out;
}

double ambient_triangle_angle_sum(const Horosphere& h, const ChartPt& u1, const ChartPt& u2,
                                  const ChartPt& u3, Curvature k) {
    HoroChart c = chart(h, k);
    HPoint a = c.embed(u1), b = c.embed(u2), d = c.embed(u3);
    return angle_at(a, b, d, k) + angle_at(b, d, a, k) + angle_at(d, a, b, k);
}

}  // namespace horolab
