#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "horolab/minkowski.hpp"
#include "horolab/projection.hpp"

namespace horolab {

/// A figure whose construction fails its own validation refuses to render.
struct FigureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scene primitives keep the hyperbolic data; projection happens at render
// time.  Flat primitives carry disk/chart coordinates directly.
struct CurvePrimitive {
    std::vector<HPoint> points;
    std::string style;  // "main" | "aux" | "accent" | "horo"
};
struct PointPrimitive {
    HPoint at;
    std::string label;
};
struct RightAngleMark {
    HPoint at;
    Vec u, v;  // unit tangents spanning the right angle
};
struct AngleArcMark {
    HPoint at;
    Vec u, v;
    double radius = 0.18;
};
struct FlatSegment {
    PlanarPt a, b;
    std::string style;
};
struct FlatPolyline {
    std::vector<PlanarPt> points;
    std::string style;
};
struct FlatLabel {
    PlanarPt at;
    std::string text;
};

using Primitive = std::variant<CurvePrimitive, PointPrimitive, RightAngleMark, AngleArcMark,
                               FlatSegment, FlatPolyline, FlatLabel>;

struct Scene {
    Curvature k;
    DiskModel projection = DiskModel::Poincare;
    bool draw_boundary = true;
    std::vector<Primitive> prims;
};

const std::vector<std::string>& figure_names();  // fig1 .. fig8

/// Construct and validate the named figure.  Throws FigureError when any
/// primitive fails the checks of its defining construction.
Scene build_figure(const std::string& name, Curvature k = {},
                   DiskModel projection = DiskModel::Poincare);

/// SVG 1.1, 800x800 canvas, 5% margin, deterministic byte-for-byte.
std::string render_svg(const Scene& scene);

void write_figure(const std::string& name, const std::string& path, Curvature k = {},
                  DiskModel projection = DiskModel::Poincare);

/// CSV table "d,pi_analytic,pi_oracle,abs_diff" on a log-spaced grid; the
/// oracle column comes from the secant/non-secant bisection.
std::string parallelism_table_csv(double d_min, double d_max, int steps, Curvature k = {});

std::vector<HPoint> sample_geodesic(const Geodesic& g, double s0, double s1, int n,
                                    Curvature k = {});

}  // namespace horolab
