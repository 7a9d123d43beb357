#include "horolab/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "horolab/horosphere.hpp"
#include "horolab/projection.hpp"

namespace horolab {

namespace {

constexpr double kTau = 6.28318530717958647692;

double euclid(const UPoint& a, const UPoint& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(acc);
}

double arc_metric(const UPoint& a, const UPoint& b) {
    double d = std::fabs(a[0] - b[0]);
    d = std::fmod(d, kTau);
    return std::min(d, kTau - d);
}

double great_circle(const UPoint& a, const UPoint& b) {
    double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    return std::acos(std::clamp(dot, -1.0, 1.0));
}

UPoint to_upoint(const Vec& v) {
    UPoint u(static_cast<std::size_t>(v.n));
    for (int i = 0; i < v.n; ++i) u[static_cast<std::size_t>(i)] = v[i];
    return u;
}

HPoint to_hpoint(const UPoint& u) {
    Vec v;
    v.n = static_cast<int>(u.size());
    for (int i = 0; i < v.n; ++i) v[i] = u[static_cast<std::size_t>(i)];
    return HPoint{v};
}

double hyperbolic_metric(const UPoint& a, const UPoint& b, Curvature k) {
    return distance(to_hpoint(a), to_hpoint(b), k);
}

UnitMap identity_map(const Unit& u) {
    UnitMap m;
    m.name = "id";
    m.source = u.name;
    m.target = u.name;
    m.apply = [](const UPoint& p) { return p; };
    m.claims = {MapClaim::IsometricEmbedding};
    m.image_metric = u.metric;
    m.check_tol = 1e-12;
    return m;
}

}  // namespace

const Unit& Registry::unit(const std::string& name) const {
    for (const Unit& u : units)
        if (u.name == name) return u;
    throw std::invalid_argument("unknown unit: " + name);
}

bool Registry::has_unit(const std::string& name) const {
    for (const Unit& u : units)
        if (u.name == name) return true;
    return false;
}

const UnitMap& Registry::lookup(const std::string& source, const std::string& target,
                                const std::string& name) const {
    for (const UnitMap& m : maps)
        if (m.source == source && m.target == target && m.name == name) return m;
    throw std::invalid_argument("unknown map: " + source + " -> " + target + " (" + name + ")");
}

UnitMap compose(const UnitMap& f, const UnitMap& g) {
    if (f.target != g.source)
        throw std::invalid_argument("compose: target of first map must be source of second");
    UnitMap m;
    m.name = f.name + ";" + g.name;
    m.source = f.source;
    m.target = g.target;
    auto fa = f.apply, ga = g.apply;
    m.apply = [fa, ga](const UPoint& p) { return ga(fa(p)); };
    std::set_intersection(f.claims.begin(), f.claims.end(), g.claims.begin(), g.claims.end(),
                          std::inserter(m.claims, m.claims.begin()));
    if (f.name == "id") {
        m.image_metric = g.image_metric;
        m.check_tol = g.check_tol;
    } else if (g.name == "id") {
        m.image_metric = f.image_metric;
        m.check_tol = f.check_tol;
    } else {
        m.image_metric = nullptr;  // graph-geodesic fallback
        m.check_tol = 1e-2;
    }
    return m;
}

double graph_geodesic_distance(const std::function<double(const UPoint&, const UPoint&)>& ambient,
                               const std::vector<UPoint>& cloud, const UPoint& from,
                               const UPoint& to, int neighbors) {
    std::vector<UPoint> nodes = cloud;
    nodes.push_back(from);
    nodes.push_back(to);
    const std::size_t n = nodes.size();
    const std::size_t src = n - 2, dst = n - 1;

    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<double, std::size_t>> near;
        near.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) near.emplace_back(ambient(nodes[i], nodes[j]), j);
        std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(neighbors), near.size());
        std::partial_sort(near.begin(), near.begin() + static_cast<long>(keep), near.end());
        for (std::size_t t = 0; t < keep; ++t) {
            adj[i].emplace_back(near[t].second, near[t].first);
            adj[near[t].second].emplace_back(i, near[t].first);
        }
    }

    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    using QE = std::pair<double, std::size_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    dist[src] = 0.0;
    pq.emplace(0.0, src);
    while (!pq.empty()) {
        auto [d, i] = pq.top();
        pq.pop();
        if (d > dist[i]) continue;
        if (i == dst) break;
        for (auto [j, w] : adj[i])
            if (d + w < dist[j]) {
                dist[j] = d + w;
                pq.emplace(dist[j], j);
            }
    }
    return dist[dst];
}

IsometryCheck check_isometric(const Registry& reg, const UnitMap& f, int pairs, double tol,
                              std::uint64_t seed) {
    if (pairs < 1) throw std::invalid_argument("check_isometric: pairs must be >= 1");
    const Unit& src = reg.unit(f.source);
    const Unit& tgt = reg.unit(f.target);
    Rng rng(seed);

    // Image cloud for maps without a closed-form intrinsic metric.
    std::vector<UPoint> cloud;
    if (!f.image_metric) {
        Rng cloud_rng(seed ^ 0x9e3779b97f4a7c15ull);
        for (int i = 0; i < 320; ++i) cloud.push_back(f.apply(src.sample(cloud_rng)));
    }

    IsometryCheck out;
    out.map_name = f.name;
    out.pairs = pairs;
    out.tol = tol;
    for (int i = 0; i < pairs; ++i) {
        UPoint x, y;
        double ds = 0.0;
        do {
            x = src.sample(rng);
            y = src.sample(rng);
            ds = src.metric(x, y);
        } while (ds < 0.2);  // keep the relative comparison well conditioned
        UPoint fx = f.apply(x), fy = f.apply(y);
        double dt = f.image_metric ? f.image_metric(fx, fy)
                                   : graph_geodesic_distance(tgt.metric, cloud, fx, fy);
        out.max_rel_deviation = std::max(out.max_rel_deviation, std::fabs(dt - ds) / ds);
    }
    out.pass = out.max_rel_deviation < tol;
    return out;
}

Registry builtin_registry(Curvature k) {
    check_curvature(k);
    Registry reg;

    Unit eplane{"EPLANE", 2, euclid, [](Rng& rng) {
                    return UPoint{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
                }};
    Unit espace{"ESPACE", 3, euclid, [](Rng& rng) {
                    return UPoint{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                                  rng.uniform(-3.0, 3.0)};
                }};
    Unit ispace{"ISPACE", 4,
                [k](const UPoint& a, const UPoint& b) { return hyperbolic_metric(a, b, k); },
                [k](Rng& rng) {
                    HPoint p = random_point(rng, 3, k, 2.0);
                    return to_upoint(p.x);
                }};
    Unit iplane{"IPLANE", 3,
                [k](const UPoint& a, const UPoint& b) { return hyperbolic_metric(a, b, k); },
                [k](Rng& rng) {
                    HPoint p = random_point(rng, 2, k, 2.0);
                    return to_upoint(p.x);
                }};
    Unit circle{"CIRCLE", 1, arc_metric,
                [](Rng& rng) { return UPoint{rng.uniform(0.0, kTau)}; }};
    Unit sphere{"SPHERE", 3, great_circle, [](Rng& rng) {
                    for (;;) {
                        double x = rng.uniform(-1.0, 1.0), y = rng.uniform(-1.0, 1.0),
                               z = rng.uniform(-1.0, 1.0);
                        double nn = x * x + y * y + z * z;
                        if (nn > 1e-3 && nn <= 1.0) {
                            double inv = 1.0 / std::sqrt(nn);
                            return UPoint{x * inv, y * inv, z * inv};
                        }
                    }
                }};
    reg.units = {eplane, espace, ispace, iplane, circle, sphere};
    for (const Unit& u : reg.units) reg.maps.push_back(identity_map(u));

    // e: EPLANE -> ESPACE, a rigid plane in general position.
    {
        UnitMap e;
        e.name = "e";
        e.source = "EPLANE";
        e.target = "ESPACE";
        e.apply = [](const UPoint& u) {
            const double q0[3] = {0.3, -0.2, 0.5};
            const double e1[3] = {1.0 / 3, 2.0 / 3, 2.0 / 3};
            const double e2[3] = {2.0 / 3, 1.0 / 3, -2.0 / 3};
            return UPoint{q0[0] + u[0] * e1[0] + u[1] * e2[0], q0[1] + u[0] * e1[1] + u[1] * e2[1],
                          q0[2] + u[0] * e1[2] + u[1] * e2[2]};
        };
        e.claims = {MapClaim::IsometricEmbedding};
        e.image_metric = euclid;  // a rigid plane carries the ambient metric
        e.check_tol = 1e-14;
        reg.maps.push_back(e);
    }

    // h: EPLANE -> ISPACE, the horosphere chart.  Its isometry claim is
    // checked against the discretized-path gauge, not the closed form.
    {
        IdealPoint xi{Vec(1.0, 1.0 / 3, 2.0 / 3, 2.0 / 3)};
        Horosphere hs{xi, 1.3};
        HoroChart hc = chart(hs, k);
        UnitMap h;
        h.name = "h";
        h.source = "EPLANE";
        h.target = "ISPACE";
        h.apply = [hc](const UPoint& u) { return to_upoint(hc.embed({u[0], u[1]}).x); };
        h.claims = {MapClaim::IsometricEmbedding};
        h.image_metric = [hs, k](const UPoint& a, const UPoint& b) {
            return discretized_path_length(hs, to_hpoint(a), to_hpoint(b), k);
        };
        h.check_tol = 1e-5;
        reg.maps.push_back(h);
    }

    // c: CIRCLE -> EPLANE, the unit circle.
    {
        UnitMap c;
        c.name = "c";
        c.source = "CIRCLE";
        c.target = "EPLANE";
        c.apply = [](const UPoint& t) { return UPoint{std::cos(t[0]), std::sin(t[0])}; };
        c.claims = {MapClaim::IsometricEmbedding};
        c.image_metric = [](const UPoint& a, const UPoint& b) {
            double na = std::hypot(a[0], a[1]), nb = std::hypot(b[0], b[1]);
            double dot = (a[0] * b[0] + a[1] * b[1]) / (na * nb);
            return std::acos(std::clamp(dot, -1.0, 1.0));
        };
        c.check_tol = 1e-12;
        reg.maps.push_back(c);
    }

    // SPHERE -> ESPACE, coordinates as-is.
    {
        UnitMap s;
        s.name = "sphere_embed";
        s.source = "SPHERE";
        s.target = "ESPACE";
        s.apply = [](const UPoint& p) { return p; };
        s.claims = {MapClaim::IsometricEmbedding};
        s.image_metric = great_circle;
        s.check_tol = 1e-12;
        reg.maps.push_back(s);
    }

    // A Lorentz boost of ISPACE; handy as a third leg in composition chains.
    {
        Isometry L = compose(Isometry::boost(4, 1, 0.7), Isometry::rotation(4, 2, 3, 0.4));
        UnitMap b;
        b.name = "lorentz_boost";
        b.source = "ISPACE";
        b.target = "ISPACE";
        b.apply = [L](const UPoint& p) { return to_upoint(apply(L, to_hpoint(p)).x); };
        b.claims = {MapClaim::IsometricEmbedding};
        b.image_metric = [k](const UPoint& a, const UPoint& b2) {
            return hyperbolic_metric(a, b2, k);
        };
        b.check_tol = 1e-9;
        reg.maps.push_back(b);
    }

    // Disk projections of IPLANE; display maps, no isometry claim.
    for (DiskModel model : {DiskModel::Poincare, DiskModel::Klein}) {
        UnitMap d;
        d.name = model == DiskModel::Poincare ? "poincare" : "klein";
        d.source = "IPLANE";
        d.target = "EPLANE";
        d.apply = [model, k](const UPoint& p) {
            PlanarPt q = to_disk(to_hpoint(p), model, k);
            return UPoint{q.x, q.y};
        };
        reg.maps.push_back(d);
    }

    return reg;
}

InstantiationReport compare_instantiations(const Registry& reg, const std::string& type_name,
                                           const UnitMap& f, const UnitMap& g, int pairs,
                                           std::uint64_t seed) {
    if (f.source != type_name || g.source != type_name)
        throw std::invalid_argument("compare_instantiations: both maps must start at the type");
    InstantiationReport rep;
    rep.type_name = type_name;
    rep.f = check_isometric(reg, f, pairs, f.check_tol, seed);
    rep.g = check_isometric(reg, g, pairs, g.check_tol, seed);
    rep.targets_differ = f.target != g.target;
    return rep;
}

}  // namespace horolab
