#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "horolab/minkowski.hpp"
#include "horolab/sampling.hpp"

namespace horolab {

using UPoint = std::vector<double>;

/// A type/space presented by a coordinate convention, a metric on its points,
/// and a seeded point sampler.
struct Unit {
    std::string name;
    int point_dim = 0;
    std::function<double(const UPoint&, const UPoint&)> metric;
    std::function<UPoint(Rng&)> sample;
};

enum class MapClaim { IsometricEmbedding };

/// A map between units.  `image_metric`, when present, is the intrinsic
/// metric of the image set inside the target (the horosphere surface metric
/// for the horosphere chart, the plane metric for a rigid plane); maps
/// without one fall back to a graph-geodesic estimate.
struct UnitMap {
    std::string name;
    std::string source;
    std::string target;
    std::function<UPoint(const UPoint&)> apply;
    std::set<MapClaim> claims;
    std::function<double(const UPoint&, const UPoint&)> image_metric;
    double check_tol = 1e-9;
};

struct Registry {
    std::vector<Unit> units;
    std::vector<UnitMap> maps;

    const Unit& unit(const std::string& name) const;
    const UnitMap& lookup(const std::string& source, const std::string& target,
                          const std::string& name) const;
    bool has_unit(const std::string& name) const;
};

/// Pointwise composition; requires target(f) == source(g).  The claim set is
/// the intersection of the two.
UnitMap compose(const UnitMap& f, const UnitMap& g);

struct IsometryCheck {
    std::string map_name;
    int pairs = 0;
    double max_rel_deviation = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Compares the source metric against the intrinsic metric of the image on
/// sampled point pairs.  Pass iff the max relative deviation stays below tol.
IsometryCheck check_isometric(const Registry& reg, const UnitMap& f, int pairs, double tol,
                              std::uint64_t seed = 42);

/// Units EPLANE, ESPACE, ISPACE, IPLANE, CIRCLE, SPHERE plus the canonical
/// maps: identities, e (rigid plane in E^3), h (horosphere chart into H^3),
/// c (unit circle into the plane), the sphere embedding, a Lorentz boost of
/// ISPACE, and the two non-isometric disk projections of IPLANE.
Registry builtin_registry(Curvature k = {});

struct InstantiationReport {
    std::string type_name;
    IsometryCheck f;
    IsometryCheck g;
    bool targets_differ = false;
};

/// Both maps must start at t; reports that each image carries t's metric
/// while the ambient targets differ.  Deliberately provides no map between
/// the two images.
InstantiationReport compare_instantiations(const Registry& reg, const std::string& type_name,
                                           const UnitMap& f, const UnitMap& g, int pairs = 64,
                                           std::uint64_t seed = 42);

/// Shortest path in a k-NN chord graph over sampled image points; the
/// fallback intrinsic metric for images without a closed form (tolerance
/// about 1e-2).
double graph_geodesic_distance(const std::function<double(const UPoint&, const UPoint&)>& ambient,
                               const std::vector<UPoint>& cloud, const UPoint& from,
                               const UPoint& to, int neighbors = 10);

}  // namespace horolab
