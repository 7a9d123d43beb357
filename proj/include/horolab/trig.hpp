#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "horolab/minkowski.hpp"
#include "horolab/sampling.hpp"

namespace horolab {

enum class GeometryKind { Hyperbolic, Spherical, Euclidean };

/// Side lengths and angles of a triangle; side a is opposite angle A and so
/// on.  The right-triangle identities below require C = pi/2.
struct TriangleMeasurements {
    double a = 0.0, b = 0.0, c = 0.0;
    double A = 0.0, B = 0.0, C = 0.0;
    GeometryKind geometry = GeometryKind::Hyperbolic;
    double radius = 1.0;  // curvature radius r, or sphere radius R
};

/// Residuals of the four right-triangle identities, one per entry.
struct IdentityResiduals {
    double pythagoras = 0.0;     // cosh c/r - cosh a/r cosh b/r   (cos for spheres)
    double sine = 0.0;           // sinh a/r - sinh c/r sin A
    double tangent = 0.0;        // tanh b/r - tanh c/r cos A  (cleared form for spheres)
    double angle_product = 0.0;  // cos A - cosh a/r sin B

    double max_abs() const;
};

IdentityResiduals hyperbolic_right_residuals(const TriangleMeasurements& t);
IdentityResiduals spherical_right_residuals(const TriangleMeasurements& t);

/// Evaluates each spherical identity at sides (ia, ib, ic) with complex trig,
/// divides out the i-power the substitution produces, and subtracts the
/// matching hyperbolic identity at real sides.  Zero for every input, not
/// just for valid triangles.
double imaginary_substitution_residual(double a, double b, double c, double A, double B);

struct SubstitutionEntry {
    std::string spherical;
    std::string hyperbolic;
    int i_power = 0;
    double residual = 0.0;
    double imag_leak = 0.0;  // imaginary part left after dividing by i^power
};

struct SubstitutionReport {
    std::array<SubstitutionEntry, 4> identities;
    double max_residual = 0.0;
};

SubstitutionReport imaginary_substitution_report(double a, double b, double c, double A, double B);

/// Right triangle built from two perpendicular geodesic legs through a random
/// vertex, then measured back with distance/angle_at.  Legs are uniform in
/// [0.1, 2.0] * r.
TriangleMeasurements synthesize_right_triangle(Rng& rng, Curvature k = {});

/// Extrinsic sampler on the radius-R sphere in E^3: vertices from rotated
/// tangent frames, sides from arc angles, angles from projected tangents.
TriangleMeasurements synthesize_spherical_right_triangle(Rng& rng, double R = 1.0);

struct AccordanceReport {
    int n = 0;
    double r = 1.0;
    std::uint64_t seed = 0;
    std::array<double, 4> max_residuals{};  // per identity
    double max_residual = 0.0;

    std::string to_string() const;
};

/// Synthesizes n random right triangles, measures them synthetically, and
/// evaluates the four hyperbolic identities on the measurements.
AccordanceReport accordance_check(int n, Curvature k = {}, std::uint64_t seed = 42);

/// Residual of sin(Pi(d)) * cosh(d/r) - 1 with Pi from angle_of_parallelism.
double parallelism_identity_check(double d, Curvature k = {});

/// Least-squares slope of log|pythagoras residual| against log r for a fixed
/// hyperbolic triangle; returns the decay exponent (about 2).
double euclidean_limit_exponent(const TriangleMeasurements& t, const std::vector<double>& radii);

}  // namespace horolab
