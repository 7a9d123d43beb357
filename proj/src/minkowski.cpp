#include "horolab/minkowski.hpp"

#include <algorithm>
#include <cmath>

namespace horolab {

namespace {

void check_same_dim(const Vec& u, const Vec& v) {
    if (u.n != v.n) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Vec operator+(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec r = a;
    for (int i = 0; i < a.n; ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec r = a;
    for (int i = 0; i < a.n; ++i) r[i] -= b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.n; ++i) r[i] = -r[i];
    return r;
}

Vec operator*(double s, const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.n; ++i) r[i] *= s;
    return r;
}

Vec operator*(const Vec& a, double s) { return s * a; }

Vec operator/(const Vec& a, double s) { return (1.0 / s) * a; }

double mdot(const Vec& u, const Vec& v) {
    check_same_dim(u, v);
    double acc = -u[0] * v[0];
    for (int i = 1; i < u.n; ++i) acc += u[i] * v[i];
    return acc;
}

double sup_norm(const Vec& u) {
    double m = 0.0;
    for (int i = 0; i < u.n; ++i) m = std::max(m, std::fabs(u[i]));
    return m;
}

double det3(const Vec& a, const Vec& b, const Vec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

double det4(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
    // Laplace expansion along the first row.
    double det = 0.0;
    for (int col = 0; col < 4; ++col) {
        double minor[3][3];
        for (int row = 1; row < 4; ++row) {
            int mc = 0;
            const Vec* rows[4] = {&a, &b, &c, &d};
            for (int cc = 0; cc < 4; ++cc) {
                if (cc == col) continue;
                minor[row - 1][mc++] = (*rows[row])[cc];
            }
        }
        double m = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1]) -
                   minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0]) +
                   minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
        det += ((col % 2 == 0) ? 1.0 : -1.0) * a[col] * m;
    }
    return det;
}

Vec mcross(const Vec& u, const Vec& v) {
    if (u.n != 3 || v.n != 3) throw std::invalid_argument("mcross requires H^2 ambient vectors");
    // J * (u x v) with J = diag(-1,1,1), so that <mcross(u,v), w> = det3(u,v,w).
    Vec r;
    r.n = 3;
    r[0] = -(u[1] * v[2] - u[2] * v[1]);
    r[1] = u[2] * v[0] - u[0] * v[2];
    r[2] = u[0] * v[1] - u[1] * v[0];
    return r;
}

HPoint lift(double x1, double x2, Curvature k) {
    check_curvature(k);
    Vec v(std::sqrt(k.r * k.r + x1 * x1 + x2 * x2), x1, x2);
    return HPoint{v};
}

HPoint lift(double x1, double x2, double x3, Curvature k) {
    check_curvature(k);
    Vec v(std::sqrt(k.r * k.r + x1 * x1 + x2 * x2 + x3 * x3), x1, x2, x3);
    return HPoint{v};
}

double sheet_residual(const HPoint& p, Curvature k) {
    return std::fabs(mdot(p.x, p.x) + k.r * k.r) / (k.r * k.r);
}

double distance(const HPoint& p, const HPoint& q, Curvature k) {
    check_curvature(k);
    double arg = -mdot(p.x, q.x) / (k.r * k.r);
    if (arg < 1.0 - 1e-12)
        throw std::invalid_argument("distance: points are not on a common sheet");
    // r*acosh(arg), evaluated through the spacelike chord: the difference
    // vector avoids the acosh precision floor near coincident points.
    Vec diff = p.x - q.x;
    double chord2 = std::max(mdot(diff, diff), 0.0);
    return 2.0 * k.r * std::asinh(0.5 * std::sqrt(chord2) / k.r);
}

Tangent initial_tangent(const HPoint& p, const HPoint& q, Curvature k) {
    check_curvature(k);
    Vec w = q.x + (mdot(q.x, p.x) / (k.r * k.r)) * p.x;
    double nn = mdot(w, w);
    // nn = r^2 sinh^2(d/r); vanishes exactly when the points coincide.
    if (!(nn > 1e-24 * k.r * k.r))
        throw std::invalid_argument("initial_tangent: coincident points");
    return Tangent{p, w / std::sqrt(nn)};
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q, Curvature k) {
    Tangent t = initial_tangent(p, q, k);
    return Geodesic{t.base, t.v};
}

Geodesic geodesic_from_direction(const HPoint& p, const Vec& v, Curvature k) {
    check_curvature(k);
    Vec w = project_tangent(p, v, k);
    double nn = mdot(w, w);
    if (!(nn > 1e-24)) throw std::invalid_argument("geodesic_from_direction: degenerate direction");
    return Geodesic{p, w / std::sqrt(nn)};
}

HPoint point_at(const Geodesic& g, double s, Curvature k) {
    check_curvature(k);
    double t = s / k.r;
    return HPoint{std::cosh(t) * g.base.x + (k.r * std::sinh(t)) * g.dir};
}

Tangent tangent_at(const Geodesic& g, double s, Curvature k) {
    check_curvature(k);
    double t = s / k.r;
    Vec v = (std::sinh(t) / k.r) * g.base.x + std::cosh(t) * g.dir;
    return Tangent{point_at(g, s, k), v};
}

double angle_between(const Tangent& a, const Tangent& b) {
    double c = std::clamp(mdot(a.v, b.v), -1.0, 1.0);
    return std::acos(c);
}

double angle_at(const HPoint& p, const HPoint& q1, const HPoint& q2, Curvature k) {
    return angle_between(initial_tangent(p, q1, k), initial_tangent(p, q2, k));
}

PerpFoot drop_perpendicular(const HPoint& p, const Geodesic& l, Curvature k) {
    check_curvature(k);
    // f(s) = -<p, x(s)> = A cosh(s/r) + B sinh(s/r) is minimized where
    // tanh(s/r) = -B/A; |B| < A holds for any p off l on the same sheet.
    double A = -mdot(p.x, l.base.x);
    double B = -k.r * mdot(p.x, l.dir);
    double s = k.r * std::atanh(std::clamp(-B / A, -1.0 + 1e-16, 1.0 - 1e-16));
    HPoint foot = point_at(l, s, k);
    bool degenerate = distance(p, foot, k) < 1e-10 * k.r;
    return PerpFoot{foot, degenerate};
}

std::pair<IdealPoint, IdealPoint> ideal_endpoints(const Geodesic& g, Curvature k) {
    check_curvature(k);
    Vec plus = g.base.x + k.r * g.dir;
    Vec minus = g.base.x - k.r * g.dir;
    return {normalize_ideal(plus), normalize_ideal(minus)};
}

IdealPoint normalize_ideal(const Vec& v) {
    if (!(v[0] > 0.0)) throw std::invalid_argument("ideal point must be future-pointing");
    return IdealPoint{v / v[0]};
}

bool same_ideal(const IdealPoint& a, const IdealPoint& b, double tol) {
    if (a.xi.n != b.xi.n) return false;
    return sup_norm(a.xi - b.xi) < tol;
}

Vec project_tangent(const HPoint& p, const Vec& w, Curvature k) {
    return w + (mdot(w, p.x) / (k.r * k.r)) * p.x;
}

Isometry Isometry::identity(int n) {
    Isometry L;
    L.n = n;
    for (int i = 0; i < n; ++i) L.m[i][i] = 1.0;
    return L;
}

Isometry Isometry::rotation(int n, int i, int j, double angle) {
    if (i < 1 || j < 1 || i >= n || j >= n || i == j)
        throw std::invalid_argument("rotation plane must be spatial");
    Isometry L = identity(n);
    double c = std::cos(angle), s = std::sin(angle);
    L.m[i][i] = c;
    L.m[j][j] = c;
    L.m[i][j] = -s;
    L.m[j][i] = s;
    return L;
}

Isometry Isometry::boost(int n, int axis, double rapidity) {
    if (axis < 1 || axis >= n) throw std::invalid_argument("boost axis out of range");
    Isometry L = identity(n);
    double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    L.m[0][0] = ch;
    L.m[axis][axis] = ch;
    L.m[0][axis] = sh;
    L.m[axis][0] = sh;
    return L;
}

Vec apply(const Isometry& L, const Vec& v) {
    if (L.n != v.n) throw std::invalid_argument("dimension mismatch");
    Vec r;
    r.n = v.n;
    for (int i = 0; i < L.n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < L.n; ++j) acc += L.m[i][j] * v[j];
        r[i] = acc;
    }
    return r;
}

HPoint apply(const Isometry& L, const HPoint& p) { return HPoint{apply(L, p.x)}; }

Geodesic apply(const Isometry& L, const Geodesic& g) {
    return Geodesic{apply(L, g.base), apply(L, g.dir)};
}

Isometry compose(const Isometry& a, const Isometry& b) {
    if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
    Isometry r;
    r.n = a.n;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < a.n; ++l) acc += a.m[i][l] * b.m[l][j];
            r.m[i][j] = acc;
        }
    return r;
}

double isometry_residual(const Isometry& L) {
    double worst = 0.0;
    for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < L.n; ++l) {
                double eta = (l == 0) ? -1.0 : 1.0;
                acc += eta * L.m[l][i] * L.m[l][j];
            }
            double target = (i == j) ? ((i == 0) ? -1.0 : 1.0) : 0.0;
            worst = std::max(worst, std::fabs(acc - target));
        }
    return worst;
}

}  // namespace horolab
