#include "horolab/projection.hpp"

#include <cmath>
#include <stdexcept>

namespace horolab {

PlanarPt to_disk(const HPoint& p, DiskModel model, Curvature k) {
    check_curvature(k);
    if (p.x.n != 3) throw std::invalid_argument("to_disk: H^2 points only");
    double t = p.x[0] / k.r, x = p.x[1] / k.r, y = p.x[2] / k.r;
    if (model == DiskModel::Klein) return {x / t, y / t};
    return {x / (1.0 + t), y / (1.0 + t)};
}

HPoint from_disk(const PlanarPt& q, DiskModel model, Curvature k) {
    check_curvature(k);
    double rho2 = q.x * q.x + q.y * q.y;
    if (!(rho2 < 1.0)) throw std::invalid_argument("from_disk: point outside the unit disk");
    if (model == DiskModel::Klein) {
        double s = 1.0 / std::sqrt(1.0 - rho2);
        return HPoint{Vec(k.r * s, k.r * s * q.x, k.r * s * q.y)};
    }
    double d = 1.0 - rho2;
    return HPoint{Vec(k.r * (1.0 + rho2) / d, k.r * 2.0 * q.x / d, k.r * 2.0 * q.y / d)};
}

}  // namespace horolab
