#pragma once

#include <optional>
#include <utility>

#include "horolab/minkowski.hpp"

namespace horolab {

enum class RelationKind {
    Secant,
    BoundaryParallelLeft,
    BoundaryParallelRight,
    Ultraparallel,
};

/// Mutual position of two distinct geodesics, with the witness that proves it:
/// an intersection point, the shared ideal endpoint, or the feet of the common
/// perpendicular.
struct LineRelation {
    RelationKind kind;
    std::optional<HPoint> intersection;
    std::optional<IdealPoint> shared_end;
    std::optional<std::pair<HPoint, HPoint>> perpendicular_feet;

    bool boundary_parallel() const {
        return kind == RelationKind::BoundaryParallelLeft ||
               kind == RelationKind::BoundaryParallelRight;
    }
};

/// All geodesics sharing the ideal endpoint xi.
struct ParallelPencil {
    IdealPoint xi;
};

/// Boundary angle Pi(d) = 2*atan(exp(-d/r)); strictly decreasing, range (0, pi/2].
double angle_of_parallelism(double d, Curvature k = {});

/// Base-a variant 2*atan(a^-d); equals angle_of_parallelism(d*ln(a), r=1).
double angle_of_parallelism_general(double d, double a);

/// Classify two geodesics with distinct carriers.  Throws std::invalid_argument
/// when the carriers coincide.
LineRelation classify(const Geodesic& l1, const Geodesic& l2, Curvature k = {});

/// The two limiting non-secant geodesics through P, ordered (left, right) by
/// the sign of the ambient volume det[P, foot, xi] (an arbitrary but stable
/// convention; in H^3 the volume is padded with a coordinate axis).
std::pair<Geodesic, Geodesic> boundary_parallels(const HPoint& P, const Geodesic& l,
                                                 Curvature k = {});

/// Bisection over the angle from the perpendicular P->S separating rays that
/// meet l from rays that do not; the independent check of the closed form.
/// Never calls angle_of_parallelism.
double secant_boundary_oracle(const HPoint& P, const Geodesic& l, double tol, Curvature k = {});

/// The geodesic joining the ideal ends of rays B->A and B->C; it lies inside
/// angle ABC and meets neither side.
Geodesic line_avoiding_angle(const HPoint& B, const HPoint& A, const HPoint& C, Curvature k = {});

/// The unique geodesic through P with forward ideal endpoint xi.
Geodesic pencil_of(const IdealPoint& xi, const HPoint& P, Curvature k = {});

/// Geodesic oriented from xi1 (backward end) to xi2 (forward end).
Geodesic geodesic_from_ideals(const IdealPoint& xi1, const IdealPoint& xi2, Curvature k = {});

/// Feet of the common perpendicular between two disjoint geodesics.
std::pair<HPoint, HPoint> common_perpendicular_feet(const Geodesic& l1, const Geodesic& l2,
                                                    Curvature k = {});

/// True when x lies strictly inside the angle at B spanned by rays B->A, B->C
/// (H^2 only).
bool strictly_inside_angle(const HPoint& x, const HPoint& B, const HPoint& A, const HPoint& C,
                           Curvature k = {});

}  // namespace horolab
