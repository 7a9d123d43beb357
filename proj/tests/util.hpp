#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "horolab/projection.hpp"

namespace testutil {

// Golden-section minimizer, the independent 1-D oracle for foot-of-
// perpendicular style checks.
inline double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                                 double tol = 1e-12) {
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Max distance of the points from their total-least-squares line.
inline double line_fit_residual(const std::vector<horolab::PlanarPt>& pts) {
    double mx = 0.0, my = 0.0;
    for (const auto& p : pts) {
        mx += p.x;
        my += p.y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& p : pts) {
        double dx = p.x - mx, dy = p.y - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    // Normal of the best line: eigenvector of the smaller eigenvalue.
    double tr = sxx + syy;
    double det = sxx * syy - sxy * sxy;
    double lam = 0.5 * tr - std::sqrt(std::max(0.25 * tr * tr - det, 0.0));
    double nx, ny;
    if (std::fabs(sxx - lam) > std::fabs(syy - lam)) {
        nx = sxy;
        ny = lam - sxx;
    } else {
        nx = lam - syy;
        ny = sxy;
    }
    double nn = std::hypot(nx, ny);
    if (nn == 0.0) return 0.0;
    nx /= nn;
    ny /= nn;
    double worst = 0.0;
    for (const auto& p : pts)
        worst = std::max(worst, std::fabs((p.x - mx) * nx + (p.y - my) * ny));
    return worst;
}

}  // namespace testutil
