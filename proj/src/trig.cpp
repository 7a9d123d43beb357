#include "horolab/trig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "horolab/parallels.hpp"

namespace horolab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_right(const TriangleMeasurements& t, GeometryKind kind, const char* who) {
    if (t.geometry != kind) throw std::invalid_argument(std::string(who) + ": wrong geometry tag");
    if (std::fabs(t.C - kPi / 2.0) > 1e-6)
        throw std::invalid_argument(std::string(who) + ": C must be a right angle");
}

struct E3 {
    double x, y, z;
};

E3 operator+(E3 a, E3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
E3 operator*(double s, E3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(E3 a, E3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
E3 normalized(E3 a) { return (1.0 / std::sqrt(dot(a, a))) * a; }

double sphere_angle(E3 at, E3 toward1, E3 toward2) {
    E3 t1 = normalized(toward1 + (-dot(toward1, at)) * at);
    E3 t2 = normalized(toward2 + (-dot(toward2, at)) * at);
    return std::acos(std::clamp(dot(t1, t2), -1.0, 1.0));
}

}  // namespace

double IdentityResiduals::max_abs() const {
    return std::max({std::fabs(pythagoras), std::fabs(sine), std::fabs(tangent),
                     std::fabs(angle_product)});
}

IdentityResiduals hyperbolic_right_residuals(const TriangleMeasurements& t) {
    require_right(t, GeometryKind::Hyperbolic, "hyperbolic_right_residuals");
    double r = t.radius;
    IdentityResiduals out;
    out.pythagoras = std::cosh(t.c / r) - std::cosh(t.a / r) * std::cosh(t.b / r);
    out.sine = std::sinh(t.a / r) - std::sinh(t.c / r) * std::sin(t.A);
    out.tangent = std::tanh(t.b / r) - std::tanh(t.c / r) * std::cos(t.A);
    out.angle_product = std::cos(t.A) - std::cosh(t.a / r) * std::sin(t.B);
    return out;
}

IdentityResiduals spherical_right_residuals(const TriangleMeasurements& t) {
    require_right(t, GeometryKind::Spherical, "spherical_right_residuals");
    double R = t.radius;
    if (!(t.a < kPi * R) || !(t.b < kPi * R) || !(t.c < kPi * R))
        throw std::invalid_argument("spherical_right_residuals: side out of range");
    IdentityResiduals out;
    out.pythagoras = std::cos(t.c / R) - std::cos(t.a / R) * std::cos(t.b / R);
    out.sine = std::sin(t.a / R) - std::sin(t.c / R) * std::sin(t.A);
    // Cleared form of tan(b/R) = tan(c/R) cos A; stays finite at c = pi R / 2.
    out.tangent =
        std::sin(t.b / R) * std::cos(t.c / R) - std::sin(t.c / R) * std::cos(t.b / R) * std::cos(t.A);
    out.angle_product = std::cos(t.A) - std::cos(t.a / R) * std::sin(t.B);
    return out;
}

SubstitutionReport imaginary_substitution_report(double a, double b, double c, double A, double B) {
    using C64 = std::complex<double>;
    const C64 I(0.0, 1.0);
    C64 ia = I * a, ib = I * b, ic = I * c;

    // Spherical identities at imaginary sides and the matching hyperbolic
    // values at real sides; identities 2 and 3 pick up one factor of i.
    C64 sph[4] = {
        std::cos(ic) - std::cos(ia) * std::cos(ib),
        std::sin(ia) - std::sin(ic) * std::sin(A),
        std::sin(ib) * std::cos(ic) - std::sin(ic) * std::cos(ib) * std::cos(A),
        std::cos(A) - std::cos(ia) * std::sin(B),
    };
    double hyp[4] = {
        std::cosh(c) - std::cosh(a) * std::cosh(b),
        std::sinh(a) - std::sinh(c) * std::sin(A),
        std::sinh(b) * std::cosh(c) - std::sinh(c) * std::cosh(b) * std::cos(A),
        std::cos(A) - std::cosh(a) * std::sin(B),
    };
    const int powers[4] = {0, 1, 1, 0};
    const char* sph_names[4] = {"cos c - cos a cos b", "sin a - sin c sin A",
                                "sin b cos c - sin c cos b cos A", "cos A - cos a sin B"};
    const char* hyp_names[4] = {"cosh c - cosh a cosh b", "sinh a - sinh c sin A",
                                "sinh b cosh c - sinh c cosh b cos A", "cos A - cosh a sin B"};

    SubstitutionReport rep;
    for (int i = 0; i < 4; ++i) {
        C64 mapped = (powers[i] == 1) ? sph[i] / I : sph[i];
        SubstitutionEntry& e = rep.identities[static_cast<std::size_t>(i)];
        e.spherical = sph_names[i];
        e.hyperbolic = hyp_names[i];
        e.i_power = powers[i];
        e.residual = std::abs(mapped - C64(hyp[i], 0.0));
        e.imag_leak = std::fabs(mapped.imag());
        rep.max_residual = std::max(rep.max_residual, e.residual);
    }
    return rep;
}

double imaginary_substitution_residual(double a, double b, double c, double A, double B) {
    return imaginary_substitution_report(a, b, c, A, B).max_residual;
}

TriangleMeasurements synthesize_right_triangle(Rng& rng, Curvature k) {
    check_curvature(k);
    HPoint vc = random_point(rng, 2, k, 1.5);
    Tangent t1 = random_tangent(rng, vc, k);
    // Second leg direction: the orthogonal completion in the tangent plane.
    Vec raw = mcross(vc.x / k.r, t1.v);
    Vec t2 = raw / std::sqrt(mdot(raw, raw));

    double leg_b = rng.uniform(0.1, 2.0) * k.r;
    double leg_a = rng.uniform(0.1, 2.0) * k.r;
    HPoint va = point_at(Geodesic{vc, t1.v}, leg_b, k);
    HPoint vb = point_at(Geodesic{vc, t2}, leg_a, k);

    TriangleMeasurements m;
    m.geometry = GeometryKind::Hyperbolic;
    m.radius = k.r;
    m.a = distance(vb, vc, k);
    m.b = distance(vc, va, k);
    m.c = distance(va, vb, k);
    m.A = angle_at(va, vb, vc, k);
    m.B = angle_at(vb, va, vc, k);
    m.C = angle_at(vc, va, vb, k);
    return m;
}

TriangleMeasurements synthesize_spherical_right_triangle(Rng& rng, double R) {
    // Random vertex with an orthonormal tangent pair, legs along both.
    double phi = rng.uniform(0.0, 2.0 * kPi);
    double zc = rng.uniform(-0.99, 0.99);
    double rho = std::sqrt(1.0 - zc * zc);
    E3 vc{rho * std::cos(phi), rho * std::sin(phi), zc};
    E3 helper{std::cos(phi + 1.0), std::sin(phi + 1.0), rng.uniform(-0.5, 0.5)};
    E3 t1 = normalized(helper + (-dot(helper, vc)) * vc);
    E3 t2 = normalized(E3{vc.y * t1.z - vc.z * t1.y, vc.z * t1.x - vc.x * t1.z,
                          vc.x * t1.y - vc.y * t1.x});

    double leg_b = rng.uniform(0.1, 1.2);  // arc angles, keep inside a hemisphere
    double leg_a = rng.uniform(0.1, 1.2);
    E3 va = std::cos(leg_b) * vc + std::sin(leg_b) * t1;
    E3 vb = std::cos(leg_a) * vc + std::sin(leg_a) * t2;

    TriangleMeasurements m;
    m.geometry = GeometryKind::Spherical;
    m.radius = R;
    m.a = R * std::acos(std::clamp(dot(vb, vc), -1.0, 1.0));
    m.b = R * std::acos(std::clamp(dot(vc, va), -1.0, 1.0));
    m.c = R * std::acos(std::clamp(dot(va, vb), -1.0, 1.0));
    m.A = sphere_angle(va, vb, vc);
    m.B = sphere_angle(vb, va, vc);
    m.C = sphere_angle(vc, va, vb);
    return m;
}

std::string AccordanceReport::to_string() const {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "accordance n=%d r=%.17g seed=%llu residuals=[%.17g, %.17g, %.17g, %.17g] "
                  "max=%.17g",
                  n, r, static_cast<unsigned long long>(seed), max_residuals[0], max_residuals[1],
                  max_residuals[2], max_residuals[3], max_residual);
    return buf;
}

AccordanceReport accordance_check(int n, Curvature k, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("accordance_check: n must be >= 1");
    Rng rng(seed);
    AccordanceReport rep;
    rep.n = n;
    rep.r = k.r;
    rep.seed = seed;
    for (int i = 0; i < n; ++i) {
        TriangleMeasurements t = synthesize_right_triangle(rng, k);
        IdentityResiduals res = hyperbolic_right_residuals(t);
        double rs[4] = {res.pythagoras, res.sine, res.tangent, res.angle_product};
        for (int j = 0; j < 4; ++j) {
            rep.max_residuals[static_cast<std::size_t>(j)] =
                std::max(rep.max_residuals[static_cast<std::size_t>(j)], std::fabs(rs[j]));
        }
    }
    rep.max_residual = std::max({rep.max_residuals[0], rep.max_residuals[1], rep.max_residuals[2],
                                 rep.max_residuals[3]});
    return rep;
}

double parallelism_identity_check(double d, Curvature k) {
    double pi_d = angle_of_parallelism(d, k);
    return std::fabs(std::sin(pi_d) * std::cosh(d / k.r) - 1.0);
}

double euclidean_limit_exponent(const TriangleMeasurements& t, const std::vector<double>& radii) {
    // Fit log|res| = const - p log r; return p.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (double r : radii) {
        double res = std::fabs(std::cosh(t.c / r) - std::cosh(t.a / r) * std::cosh(t.b / r));
        if (res <= 0.0) continue;
        double x = std::log(r), y = std::log(res);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) throw std::invalid_argument("euclidean_limit_exponent: need at least two radii");
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return -slope;
}

}  // namespace horolab
