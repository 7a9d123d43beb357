#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace horolab {

/// Curvature radius of the space; sectional curvature is -1/(r*r).
struct Curvature {
    double r = 1.0;
};

/// Ambient Minkowski vector with signature (-,+,...,+).  `n` is the ambient
/// size: 3 for H^2 scenes, 4 for H^3.  Unused trailing components stay zero.
struct Vec {
    std::array<double, 4> c{};
    int n = 3;

    Vec() = default;
    Vec(double t, double x, double y) : c{t, x, y, 0.0}, n(3) {}
    Vec(double t, double x, double y, double z) : c{t, x, y, z}, n(4) {}

    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(double s, const Vec& a);
Vec operator*(const Vec& a, double s);
Vec operator/(const Vec& a, double s);

/// Point on the upper hyperboloid sheet: <x,x> = -r^2, x[0] > 0.
struct HPoint {
    Vec x;
    int dim() const { return x.n - 1; }
};

/// Unit spacelike vector attached to a point: <base,v> = 0, <v,v> = 1.
struct Tangent {
    HPoint base;
    Vec v;
};

/// Complete geodesic x(s) = base*cosh(s/r) + r*dir*sinh(s/r).
struct Geodesic {
    HPoint base;
    Vec dir;
};

/// Asymptotic endpoint of a geodesic: a future null vector in the gauge
/// xi[0] = 1, so ideal points compare componentwise.
struct IdealPoint {
    Vec xi;
};

/// The Minkowski bilinear form -u0*v0 + sum_i ui*vi.
/// Throws std::invalid_argument on dimension mismatch.
double mdot(const Vec& u, const Vec& v);

/// Euclidean sup norm of the components (scale estimates for tolerances).
double sup_norm(const Vec& u);

double det3(const Vec& a, const Vec& b, const Vec& c);
double det4(const Vec& a, const Vec& b, const Vec& c, const Vec& d);

/// Minkowski cross product in H^2 ambient space: <mcross(u,v), w> = det3(u,v,w).
Vec mcross(const Vec& u, const Vec& v);

/// Lift spatial coordinates onto the upper sheet of radius r.
HPoint lift(double x1, double x2, Curvature k = {});
HPoint lift(double x1, double x2, double x3, Curvature k = {});

/// Residual |<x,x> + r^2| / r^2 of the sheet constraint.
double sheet_residual(const HPoint& p, Curvature k = {});

/// Geodesic distance r*acosh(-<p,q>/r^2).  The acosh argument is clamped to 1
/// when within 1e-12 below; beyond that the points are rejected as invalid.
double distance(const HPoint& p, const HPoint& q, Curvature k = {});

/// Unit tangent at p pointing toward q.  Throws on coincident points.
Tangent initial_tangent(const HPoint& p, const HPoint& q, Curvature k = {});

/// Geodesic through two distinct points, parametrized so point_at(0) = p and
/// point_at(distance(p,q)) = q.
Geodesic geodesic_through(const HPoint& p, const HPoint& q, Curvature k = {});

/// Geodesic with the given (not necessarily unit) spacelike direction at p;
/// the direction is projected onto the tangent space at p and normalized.
Geodesic geodesic_from_direction(const HPoint& p, const Vec& v, Curvature k = {});

HPoint point_at(const Geodesic& g, double s, Curvature k = {});

/// Unit tangent of g at arclength s (derivative of point_at).
Tangent tangent_at(const Geodesic& g, double s, Curvature k = {});

/// Angle in [0, pi] at p between the geodesics toward q1 and q2.
double angle_at(const HPoint& p, const HPoint& q1, const HPoint& q2, Curvature k = {});

/// Angle between two tangents at a common point.
double angle_between(const Tangent& a, const Tangent& b);

struct PerpFoot {
    HPoint foot;
    bool degenerate = false;  // p was on l; foot == p
};

/// Foot of the perpendicular from p to l (the distance minimizer on l).
PerpFoot drop_perpendicular(const HPoint& p, const Geodesic& l, Curvature k = {});

/// The two asymptotic endpoints {base + r*dir, base - r*dir}, gauge-normalized.
/// First element is the forward (s -> +inf) end.
std::pair<IdealPoint, IdealPoint> ideal_endpoints(const Geodesic& g, Curvature k = {});

/// Rescale a future null vector into the xi[0] = 1 gauge.
IdealPoint normalize_ideal(const Vec& v);

bool same_ideal(const IdealPoint& a, const IdealPoint& b, double tol = 1e-9);

/// Project w onto the tangent space at p: w + <w,p>/r^2 * p.
Vec project_tangent(const HPoint& p, const Vec& w, Curvature k = {});

/// Linear map of the ambient space preserving the Minkowski form and the
/// upper sheet (m[0][0] > 0).
struct Isometry {
    std::array<std::array<double, 4>, 4> m{};
    int n = 3;

    static Isometry identity(int n);
    /// Rotation by `angle` in the spatial plane (i, j), 1 <= i < j <= n-1.
    static Isometry rotation(int n, int i, int j, double angle);
    /// Boost of the given rapidity in the (0, axis) plane.
    static Isometry boost(int n, int axis, double rapidity);
};

Vec apply(const Isometry& L, const Vec& v);
HPoint apply(const Isometry& L, const HPoint& p);
Geodesic apply(const Isometry& L, const Geodesic& g);

/// Composition: compose(a, b) maps x to a(b(x)).
Isometry compose(const Isometry& a, const Isometry& b);

/// Max componentwise residual of L^T J L - J.
double isometry_residual(const Isometry& L);

inline void check_curvature(const Curvature& k) {
    if (!(k.r > 0.0) || !std::isfinite(k.r))
        throw std::invalid_argument("curvature radius must be positive and finite");
}

}  // namespace horolab
