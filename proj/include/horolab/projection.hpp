#pragma once

#include "horolab/minkowski.hpp"

namespace horolab {

enum class DiskModel { Poincare, Klein };

struct PlanarPt {
    double x = 0.0;
    double y = 0.0;
};

/// H^2 point to unit-disk coordinates; Klein is (x1,x2)/x0, Poincare is
/// (x1,x2)/(r + x0) after rescaling to r = 1.
PlanarPt to_disk(const HPoint& p, DiskModel model, Curvature k = {});

/// Inverse of to_disk; requires |q| < 1.
HPoint from_disk(const PlanarPt& q, DiskModel model, Curvature k = {});

}  // namespace horolab
