#include "horolab/parallels.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <vector>

namespace horolab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Minkowski-orthogonal complement of the carrier plane span{base, dir}.
// The form restricted to the complement is positive definite, so plain
// Gram-Schmidt with the Minkowski product is safe there.
std::vector<Vec> carrier_complement(const Geodesic& g, Curvature k) {
    std::vector<Vec> out;
    const Vec& b = g.base.x;
    const Vec& d = g.dir;
    double r2 = k.r * k.r;
    for (int axis = 0; axis < b.n && static_cast<int>(out.size()) < b.n - 2; ++axis) {
        Vec e;
        e.n = b.n;
        e[axis] = 1.0;
        Vec u = e + (mdot(e, b) / r2) * b - mdot(e, d) * d;
        for (const Vec& w : out) u = u - mdot(u, w) * w;
        double nn = mdot(u, u);
        if (nn > 1e-12) out.push_back(u / std::sqrt(nn));
    }
    return out;
}

struct CarrierMeet {
    bool nontrivial = false;
    Vec v;  // direction spanning V1 cap V2 when nontrivial
};

// Intersection of the two carrier planes through the origin.  A point of l1's
// plane, alpha*b1 + beta*d1, lies in l2's plane iff it is orthogonal to the
// complement of that plane.
CarrierMeet carrier_intersection(const Geodesic& l1, const Geodesic& l2, Curvature k) {
    std::vector<Vec> comp = carrier_complement(l2, k);
    const Vec& b1 = l1.base.x;
    const Vec& d1 = l1.dir;
    double scale = std::max(1.0, sup_norm(b1));

    double alpha = 0.0, beta = 0.0;
    if (comp.size() == 1) {
        double A = mdot(b1, comp[0]);
        double B = mdot(d1, comp[0]);
        if (std::fabs(A) < 1e-12 * scale && std::fabs(B) < 1e-12 * scale) return {};
        alpha = B;
        beta = -A;
    } else if (comp.size() == 2) {
        double m00 = mdot(b1, comp[0]), m01 = mdot(d1, comp[0]);
        double m10 = mdot(b1, comp[1]), m11 = mdot(d1, comp[1]);
        double det = m00 * m11 - m01 * m10;
        double n0 = std::hypot(m00, m01), n1 = std::hypot(m10, m11);
        if (std::fabs(det) > 1e-9 * std::max(n0 * n1, 1e-30)) return {};
        if (n0 >= n1) {
            if (n0 < 1e-12 * scale) return {};
            alpha = m01;
            beta = -m00;
        } else {
            alpha = m11;
            beta = -m10;
        }
    } else {
        return {};
    }
    Vec v = alpha * b1 + beta * d1;
    if (sup_norm(v) < 1e-12 * scale) return {};
    return {true, v};
}

// Arbitrary but stable left/right side convention: the sign of the ambient
// volume spanned by P, the foot on the other line, and the shared end.  In
// H^3 the volume is padded with a coordinate axis.
RelationKind side_label(const HPoint& P, const HPoint& foot, const IdealPoint& xi) {
    double s = 0.0;
    if (P.x.n == 3) {
        s = det3(P.x, foot.x, xi.xi);
    } else {
        for (int axis = 3; axis >= 1 && std::fabs(s) < 1e-12; --axis) {
            Vec e;
            e.n = 4;
            e[axis] = 1.0;
            s = det4(P.x, foot.x, xi.xi, e);
        }
    }
    return s > 0.0 ? RelationKind::BoundaryParallelLeft : RelationKind::BoundaryParallelRight;
}

bool ray_hits(const Geodesic& ray, const Geodesic& l, Curvature k) {
    CarrierMeet meet = carrier_intersection(ray, l, k);
    if (!meet.nontrivial) return false;
    double qq = mdot(meet.v, meet.v);
    double scale = sup_norm(meet.v);
    if (!(qq < -1e-12 * scale * scale)) return false;
    Vec x = meet.v * (k.r / std::sqrt(-qq));
    if (x[0] < 0.0) x = -x;
    return mdot(x, ray.dir) > 0.0;  // forward side of the ray
}

}  // namespace

double angle_of_parallelism(double d, Curvature k) {
    check_curvature(k);
    if (d < 0.0) throw std::invalid_argument("angle_of_parallelism: negative distance");
    return 2.0 * std::atan(std::exp(-d / k.r));
}

double angle_of_parallelism_general(double d, double a) {
    if (d < 0.0) throw std::invalid_argument("angle_of_parallelism_general: negative distance");
    if (!(a > 1.0)) throw std::invalid_argument("angle_of_parallelism_general: base must exceed 1");
    return 2.0 * std::atan(std::pow(a, -d));
}

Geodesic pencil_of(const IdealPoint& xi, const HPoint& P, Curvature k) {
    check_curvature(k);
    Vec w = project_tangent(P, xi.xi, k);
    double nn = mdot(w, w);  // equals (<xi,P>/r)^2 > 0
    return Geodesic{P, w / std::sqrt(nn)};
}

Geodesic geodesic_from_ideals(const IdealPoint& xi1, const IdealPoint& xi2, Curvature k) {
    check_curvature(k);
    double g = -mdot(xi1.xi, xi2.xi);
    if (!(g > 1e-300)) throw std::invalid_argument("geodesic_from_ideals: coincident ideal points");
    double scale = k.r / std::sqrt(2.0 * g);
    Vec base = scale * (xi1.xi + xi2.xi);
    Vec dir = (xi2.xi - xi1.xi) / std::sqrt(2.0 * g);
    return Geodesic{HPoint{base}, dir};
}

std::pair<HPoint, HPoint> common_perpendicular_feet(const Geodesic& l1, const Geodesic& l2,
                                                    Curvature k) {
    check_curvature(k);
    // Stationarity of -<x(s), y(t)> in u = tanh(s/r), v = tanh(t/r) reduces to
    // A u^2 + B u + A = 0; the roots multiply to 1 so exactly one is admissible.
    double P = mdot(l1.base.x, l2.base.x);
    double Q = k.r * mdot(l1.base.x, l2.dir);
    double R = k.r * mdot(l1.dir, l2.base.x);
    double S = k.r * k.r * mdot(l1.dir, l2.dir);

    double A = P * R - Q * S;
    double B = P * P + R * R - Q * Q - S * S;
    double u;
    if (std::fabs(A) < 1e-14 * std::max(std::fabs(B), 1.0)) {
        u = (std::fabs(B) > 0.0) ? -A / B : 0.0;
    } else {
        double disc = std::max(B * B - 4.0 * A * A, 0.0);
        double sq = std::sqrt(disc);
        double u1 = (-B + sq) / (2.0 * A);
        double u2 = (-B - sq) / (2.0 * A);
        u = (std::fabs(u1) <= std::fabs(u2)) ? u1 : u2;
    }
    u = std::clamp(u, -1.0 + 1e-16, 1.0 - 1e-16);
    double denom1 = Q * u + S, denom2 = P + R * u;
    double v = (std::fabs(denom1) >= std::fabs(denom2)) ? -(P * u + R) / denom1
                                                        : -(Q + S * u) / denom2;
    v = std::clamp(v, -1.0 + 1e-16, 1.0 - 1e-16);
    double s = k.r * std::atanh(u);
    double t = k.r * std::atanh(v);
    return {point_at(l1, s, k), point_at(l2, t, k)};
}

LineRelation classify(const Geodesic& l1, const Geodesic& l2, Curvature k) {
    check_curvature(k);
    auto [p1, m1] = ideal_endpoints(l1, k);
    auto [p2, m2] = ideal_endpoints(l2, k);

    const IdealPoint* ends1[2] = {&p1, &m1};
    const IdealPoint* ends2[2] = {&p2, &m2};
    int shared = 0;
    const IdealPoint* shared_xi = nullptr;
    for (const auto* a : ends1)
        for (const auto* b : ends2)
            if (same_ideal(*a, *b)) {
                ++shared;
                shared_xi = a;
            }
    if (shared >= 2) throw std::invalid_argument("classify: identical carriers");

    if (shared == 1) {
        PerpFoot f = drop_perpendicular(l1.base, l2, k);
        if (f.degenerate) throw std::invalid_argument("classify: identical carriers");
        LineRelation rel;
        rel.kind = side_label(l1.base, f.foot, *shared_xi);
        rel.shared_end = *shared_xi;
        return rel;
    }

    CarrierMeet meet = carrier_intersection(l1, l2, k);
    if (meet.nontrivial) {
        double qq = mdot(meet.v, meet.v);
        double scale = sup_norm(meet.v);
        if (qq < -1e-12 * scale * scale) {
            Vec x = meet.v * (k.r / std::sqrt(-qq));
            if (x[0] < 0.0) x = -x;
            LineRelation rel;
            rel.kind = RelationKind::Secant;
            rel.intersection = HPoint{x};
            return rel;
        }
        if (qq < 1e-12 * scale * scale) {
            // Near-null carrier meet without a matching endpoint pair: a
            // tangency at infinity inside the gauge tolerance.
            std::cerr << "horolab: near-tangent pair resolved to boundary parallel\n";
            IdealPoint xi = normalize_ideal(meet.v[0] > 0.0 ? meet.v : -meet.v);
            PerpFoot f = drop_perpendicular(l1.base, l2, k);
            LineRelation rel;
            rel.kind = side_label(l1.base, f.foot, xi);
            rel.shared_end = xi;
            return rel;
        }
    }

    LineRelation rel;
    rel.kind = RelationKind::Ultraparallel;
    rel.perpendicular_feet = common_perpendicular_feet(l1, l2, k);
    return rel;
}

std::pair<Geodesic, Geodesic> boundary_parallels(const HPoint& P, const Geodesic& l, Curvature k) {
    check_curvature(k);
    PerpFoot f = drop_perpendicular(P, l, k);
    if (f.degenerate) throw std::invalid_argument("boundary_parallels: point lies on the line");
    auto [xi_plus, xi_minus] = ideal_endpoints(l, k);
    Geodesic g_plus = pencil_of(xi_plus, P, k);
    Geodesic g_minus = pencil_of(xi_minus, P, k);
    bool plus_is_left =
        side_label(P, f.foot, xi_plus) == RelationKind::BoundaryParallelLeft;
    return plus_is_left ? std::make_pair(g_plus, g_minus) : std::make_pair(g_minus, g_plus);
}

double secant_boundary_oracle(const HPoint& P, const Geodesic& l, double tol, Curvature k) {
    check_curvature(k);
    if (!(tol > 0.0)) throw std::invalid_argument("secant_boundary_oracle: tol must be positive");
    PerpFoot f = drop_perpendicular(P, l, k);
    if (f.degenerate) throw std::invalid_argument("secant_boundary_oracle: point lies on the line");

    Vec u0 = initial_tangent(P, f.foot, k).v;
    // Second frame vector: the tangent of l at the foot, carried into the
    // configuration plane and orthogonalized at P.
    Vec t = tangent_at(l, 0.0, k).v;
    double r2 = k.r * k.r;
    Vec u1 = l.base.x + (mdot(l.base.x, P.x) / r2) * P.x - mdot(l.base.x, u0) * u0;
    if (mdot(u1, u1) < 1e-12) u1 = t + (mdot(t, P.x) / r2) * P.x - mdot(t, u0) * u0;
    u1 = u1 / std::sqrt(mdot(u1, u1));

    auto hits = [&](double theta) {
        Geodesic ray{P, std::cos(theta) * u0 + std::sin(theta) * u1};
        return ray_hits(ray, l, k);
    };

    double lo = tol, hi = kPi / 2.0 - tol;
    if (!hits(lo)) return lo;
    for (int step = 0; step < 60 && (hi - lo) > tol; ++step) {
        double mid = 0.5 * (lo + hi);
        (hits(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Geodesic line_avoiding_angle(const HPoint& B, const HPoint& A, const HPoint& C, Curvature k) {
    check_curvature(k);
    double ang = angle_at(B, A, C, k);
    if (ang < 1e-9 || ang > kPi - 1e-9)
        throw std::invalid_argument("line_avoiding_angle: collinear input");
    IdealPoint xiA = ideal_endpoints(geodesic_through(B, A, k), k).first;
    IdealPoint xiC = ideal_endpoints(geodesic_through(B, C, k), k).first;
    return geodesic_from_ideals(xiA, xiC, k);
}

bool strictly_inside_angle(const HPoint& x, const HPoint& B, const HPoint& A, const HPoint& C,
                           Curvature k) {
    if (x.x.n != 3) throw std::invalid_argument("strictly_inside_angle: H^2 only");
    Geodesic ba = geodesic_through(B, A, k);
    Geodesic bc = geodesic_through(B, C, k);
    Vec w_ba = mcross(ba.base.x, ba.dir);
    Vec w_bc = mcross(bc.base.x, bc.dir);
    double side_c = mdot(C.x, w_ba);
    double side_a = mdot(A.x, w_bc);
    return mdot(x.x, w_ba) * side_c > 0.0 && mdot(x.x, w_bc) * side_a > 0.0;
}

}  // namespace horolab
