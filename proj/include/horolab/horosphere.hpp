#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "horolab/minkowski.hpp"

namespace horolab {

/// Level set {x on sheet : -<x,xi> = level * r} for a gauge-normalized ideal
/// point xi.  In H^2 this is a horocycle, in H^3 a horosphere.
struct Horosphere {
    IdealPoint xi;
    double level = 1.0;
};

using ChartPt = std::array<double, 2>;  // second coordinate unused for H^2

/// Flat chart of a horosphere.  With xi_hat the null vector rescaled so that
/// -<base,xi_hat> = r^2 and e_i unit spacelike, orthogonal to each other and
/// to both base and xi_hat,
///
///   embed(u) = base + sum_i u_i e_i + (|u|^2 / (2 r^2)) xi_hat
///
/// stays on the sheet and on the horosphere for every u; chart distances are
/// the intrinsic surface distances.
struct HoroChart {
    Horosphere h;
    Curvature k;
    HPoint base;
    Vec xi_hat;
    std::array<Vec, 2> frame;
    int chart_dim = 2;  // 1 for horocycles in H^2

    HPoint embed(const ChartPt& u) const;
    ChartPt coords(const HPoint& x) const;  // requires x on the horosphere

    /// Velocity of t -> embed(at + t*dir) at parameter t.
    Vec velocity(const ChartPt& at, const ChartPt& dir, double t) const;
};

/// Segment of the image of a straight chart line, parametrized by arclength.
struct HorocycleArc {
    HoroChart chart;
    ChartPt start{};
    ChartPt dir{};  // unit chart direction
    double t0 = 0.0;
    double t1 = 1.0;

    ChartPt chart_point(double t) const;
    HPoint at(double t) const;
    Vec velocity(double t) const;
};

Horosphere horosphere_through(const HPoint& p, const IdealPoint& xi, Curvature k = {});

/// Membership residual |-<x,xi> - level*r| / r.
double horosphere_residual(const Horosphere& h, const HPoint& x, Curvature k = {});

/// Canonical chart: base point on the geodesic from the model origin toward
/// xi, frame completed by Gram-Schmidt.
HoroChart chart(const Horosphere& h, Curvature k = {});

/// Chart anchored at an arbitrary point of the horosphere (gauge freedom).
HoroChart chart_at(const Horosphere& h, const HPoint& base_on_h, Curvature k = {});

/// Shortest distance within the surface between two of its points; equals the
/// Euclidean norm of the chart coordinate difference.  Throws when either
/// point is off the surface.
double intrinsic_distance(const Horosphere& h, const HPoint& x, const HPoint& y, Curvature k = {});

/// Independent length gauge: chord sums of the embedded straight-chart path
/// over 64/128/256 segments with two Richardson extrapolation stages.  Uses
/// only ambient distances of embedded points.
double discretized_path_length(const Horosphere& h, const HPoint& x, const HPoint& y,
                               Curvature k = {});

/// Image of a straight chart line (H^3 only); coincides with the intersection
/// of the horosphere and the totally geodesic plane through the embedded line
/// and xi.
HorocycleArc horocycle_section(const Horosphere& h, const ChartPt& point, const ChartPt& dir,
                               double t0 = -1.0, double t1 = 1.0, Curvature k = {});

/// Arc between two chart points (works for both chart dimensions).
HorocycleArc horocycle_arc(const Horosphere& h, const ChartPt& from, const ChartPt& to,
                           Curvature k = {});

/// Numerical rank of the span of a set of ambient vectors.
int span_rank(const std::vector<Vec>& vs, double tol = 1e-9);

struct APReport {
    int samples = 0;
    int failures = 0;
    double min_parallel_separation = 0.0;  // ambient, over all samples
    double max_intersection_gap = 0.0;     // ambient, over confirmed crossings
};

/// For random chart lines L and points P off L: exactly one chart line
/// through P misses L.  The miss is re-verified on the embedded curves (their
/// ambient separation stays bounded away from zero) and every perturbed
/// candidate is re-verified to cross by embedding the chart intersection.
APReport verify_AP(const Horosphere& h, int samples, std::uint64_t seed = 42, Curvature k = {});

struct TriangleCheck {
    std::array<double, 3> sides{};   // d(v2,v3), d(v3,v1), d(v1,v2)
    std::array<double, 3> angles{};  // at v1, v2, v3
    double law_of_cosines = 0.0;     // |c^2 - a^2 - b^2 + 2ab cos(C)|
    double angle_sum = 0.0;          // |A + B + C - pi|
};

/// Sides via intrinsic distance, angles between the section curves at each
/// vertex (from embedded tangents); residuals of the Euclidean relations.
/// Requires chart area > 1e-6.
TriangleCheck euclidean_triangle_check(const Horosphere& h, const ChartPt& u1, const ChartPt& u2,
                                       const ChartPt& u3, Curvature k = {});

/// Angle sum of the ambient geodesic triangle on the same vertices.
double ambient_triangle_angle_sum(const Horosphere& h, const ChartPt& u1, const ChartPt& u2,
                                  const ChartPt& u3, Curvature k = {});

}  // namespace horolab
