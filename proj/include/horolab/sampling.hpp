#pragma once

#include <cstdint>
#include <random>

#include "horolab/minkowski.hpp"

namespace horolab {

/// Seeded generator with a platform-independent uniform double, so seeded
/// reports are reproducible bit-for-bit.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

/// Random point with spatial coordinates uniform in [-box, box] * r.
/// dim is the space dimension (2 or 3).
inline HPoint random_point(Rng& rng, int dim, Curvature k = {}, double box = 2.0) {
    if (dim == 2) return lift(rng.uniform(-box, box) * k.r, rng.uniform(-box, box) * k.r, k);
    return lift(rng.uniform(-box, box) * k.r, rng.uniform(-box, box) * k.r,
                rng.uniform(-box, box) * k.r, k);
}

inline Tangent random_tangent(Rng& rng, const HPoint& p, Curvature k = {}) {
    for (;;) {
        Vec raw;
        raw.n = p.x.n;
        for (int i = 0; i < raw.n; ++i) raw[i] = rng.uniform(-1.0, 1.0);
        Vec w = project_tangent(p, raw, k);
        double nn = mdot(w, w);
        if (nn > 1e-6) return Tangent{p, w / std::sqrt(nn)};
    }
}

inline Geodesic random_geodesic(Rng& rng, int dim, Curvature k = {}, double box = 2.0) {
    HPoint p = random_point(rng, dim, k, box);
    Tangent t = random_tangent(rng, p, k);
    return Geodesic{p, t.v};
}

inline IdealPoint random_ideal(Rng& rng, int dim) {
    if (dim == 2) {
        double phi = rng.uniform(0.0, 6.283185307179586);
        return IdealPoint{Vec(1.0, std::cos(phi), std::sin(phi))};
    }
    for (;;) {
        double x = rng.uniform(-1.0, 1.0), y = rng.uniform(-1.0, 1.0), z = rng.uniform(-1.0, 1.0);
        double nn = x * x + y * y + z * z;
        if (nn > 1e-4 && nn <= 1.0) {
            double inv = 1.0 / std::sqrt(nn);
            return IdealPoint{Vec(1.0, x * inv, y * inv, z * inv)};
        }
    }
}

/// Random Lorentz transform built from a handful of rotations and boosts.
inline Isometry random_isometry(Rng& rng, int n) {
    Isometry L = Isometry::identity(n);
    for (int rep = 0; rep < 3; ++rep) {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                L = compose(Isometry::rotation(n, i, j, rng.uniform(0.0, 6.283185307179586)), L);
        L = compose(Isometry::boost(n, rng.uniform_int(1, n - 1), rng.uniform(-1.5, 1.5)), L);
    }
    return L;
}

}  // namespace horolab
