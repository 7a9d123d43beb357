#include "horolab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "horolab/horosphere.hpp"
#include "horolab/parallels.hpp"
#include "horolab/sampling.hpp"
#include "horolab/trig.hpp"
#include "horolab/units.hpp"

namespace horolab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void add_check(SuiteReport& rep, const std::string& name, double residual, double tol,
               const std::optional<double>& tol_override) {
    double t = tol_override.value_or(tol);
    rep.checks.push_back(Check{name, residual, t, residual < t});
}

double max_abs_diff(const IdealPoint& a, const IdealPoint& b) { return sup_norm(a.xi - b.xi); }

// Distance from a point to a geodesic (witness-on-line residuals).
double line_residual(const HPoint& p, const Geodesic& l, Curvature k) {
    PerpFoot f = drop_perpendicular(p, l, k);
    return distance(p, f.foot, k);
}

// Signed arclength of a point assumed to lie on g.
double signed_param(const Geodesic& g, const HPoint& p, Curvature k) {
    double d = distance(g.base, p, k);
    return mdot(p.x, g.dir) >= 0.0 ? d : -d;
}

SuiteReport suite_parallels(std::uint64_t seed, Curvature k,
                            const std::optional<double>& tol_override) {
    SuiteReport rep{"parallels", seed, {}};
    Rng rng(seed);
    double r = k.r;

    {  // closed form vs the secant/non-secant bisection oracle
        Isometry L = random_isometry(rng, 3);
        Geodesic l = apply(L, Geodesic{lift(0.0, 0.0, k), Vec(0.0, 1.0, 0.0)});
        Geodesic up = apply(L, Geodesic{lift(0.0, 0.0, k), Vec(0.0, 0.0, 1.0)});
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            double d = 0.01 * std::pow(5.0 / 0.01, i / 99.0);
            HPoint P = point_at(up, d, k);
            double oracle = secant_boundary_oracle(P, l, 1e-8, k);
            worst = std::max(worst, std::fabs(oracle - angle_of_parallelism(d, k)));
        }
        add_check(rep, "pi_oracle_agreement", worst, 1e-7, tol_override);
    }

    {  // monotone, and the two limits of STP prop 23
        double worst = 0.0;
        double prev = angle_of_parallelism(0.0, k);
        worst = std::max(worst, std::fabs(prev - kPi / 2.0));
        for (int i = 1; i <= 200; ++i) {
            double cur = angle_of_parallelism(0.05 * i * r, k);
            worst = std::max(worst, cur - prev);  // must be strictly decreasing
            prev = cur;
        }
        worst = std::max(worst, angle_of_parallelism(40.0 * r, k));
        add_check(rep, "pi_monotone_limits", worst, 1e-12, tol_override);
    }

    {  // base-a family reduces to the natural-base form by unit rescaling
        double worst = 0.0;
        for (double a : {1.5, 2.0, 2.718281828459045, 10.0})
            for (int i = 0; i < 250; ++i) {
                double d = rng.uniform(0.0, 20.0);
                worst = std::max(worst, std::fabs(angle_of_parallelism_general(d, a) -
                                                  angle_of_parallelism(d * std::log(a), {1.0})));
            }
        add_check(rep, "unit_rescaling", worst, 1e-14, tol_override);
    }

    {  // sharing an end is symmetric and transitive on pencils
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            IdealPoint xi = random_ideal(rng, 2);
            Geodesic g[3];
            for (auto& gg : g) gg = pencil_of(xi, random_point(rng, 2, k), k);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    if (a == b) continue;
                    LineRelation rel = classify(g[a], g[b], k);
                    if (!rel.boundary_parallel()) {
                        worst = 1.0;
                        continue;
                    }
                    worst = std::max(worst, max_abs_diff(*rel.shared_end, xi));
                }
        }
        add_check(rep, "parallelism_equivalence", worst, 1e-9, tol_override);
    }

    {  // trichotomy with validated witnesses
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            // secant pair through a common point
            HPoint p = random_point(rng, 2, k);
            Geodesic g1{p, random_tangent(rng, p, k).v};
            Geodesic g2{p, random_tangent(rng, p, k).v};
            if (std::fabs(mdot(g1.dir, g2.dir)) > 0.999) continue;
            LineRelation rel = classify(g1, g2, k);
            if (rel.kind != RelationKind::Secant) {
                worst = 1.0;
                continue;
            }
            worst = std::max(worst, distance(*rel.intersection, p, k));
        }
        for (int i = 0; i < 50; ++i) {
            // boundary pair sharing one end
            IdealPoint xi = random_ideal(rng, 2);
            Geodesic g1 = pencil_of(xi, random_point(rng, 2, k), k);
            Geodesic g2 = pencil_of(xi, random_point(rng, 2, k), k);
            LineRelation rel = classify(g1, g2, k);
            if (!rel.boundary_parallel()) {
                worst = 1.0;
                continue;
            }
            worst = std::max(worst, max_abs_diff(*rel.shared_end, xi));
        }
        for (int i = 0; i < 80; ++i) {
            // generic pair: accept any kind, validate the witness
            Geodesic g1 = random_geodesic(rng, 2, k);
            Geodesic g2 = random_geodesic(rng, 2, k);
            LineRelation rel = classify(g1, g2, k);
            if (rel.kind == RelationKind::Secant) {
                worst = std::max(worst, line_residual(*rel.intersection, g1, k));
                worst = std::max(worst, line_residual(*rel.intersection, g2, k));
            } else if (rel.kind == RelationKind::Ultraparallel) {
                auto [f1, f2] = *rel.perpendicular_feet;
                worst = std::max(worst, line_residual(f1, g1, k));
                worst = std::max(worst, line_residual(f2, g2, k));
                if (distance(f1, f2, k) < 1e-9 * r) worst = 1.0;
                double a1 = angle_between(initial_tangent(f1, f2, k),
                                          tangent_at(g1, signed_param(g1, f1, k), k));
                double a2 = angle_between(initial_tangent(f2, f1, k),
                                          tangent_at(g2, signed_param(g2, f2, k), k));
                worst = std::max(worst, std::fabs(a1 - kPi / 2.0));
                worst = std::max(worst, std::fabs(a2 - kPi / 2.0));
            }
        }
        add_check(rep, "classification_trichotomy", worst, 1e-8, tol_override);
    }

    {  // sin(Pi(d)) cosh(d/r) = 1
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            double d = 0.01 * std::pow(10.0 / 0.01, i / 99.0) * r;
            worst = std::max(worst, parallelism_identity_check(d, k));
        }
        add_check(rep, "sin_pi_identity", worst, 1e-12, tol_override);
    }

    return rep;
}

SuiteReport suite_horosphere(std::uint64_t seed, Curvature k,
                             const std::optional<double>& tol_override) {
    SuiteReport rep{"horosphere", seed, {}};
    Rng rng(seed);
    double r = k.r;

    IdealPoint xi = random_ideal(rng, 3);
    Horosphere h{xi, rng.uniform(0.6, 1.8)};
    HoroChart c = chart(h, k);

    {  // closed-form intrinsic distance against the chord-sum gauge
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            ChartPt u{rng.uniform(-5.0, 5.0) * r, rng.uniform(-5.0, 5.0) * r};
            ChartPt v{rng.uniform(-5.0, 5.0) * r, rng.uniform(-5.0, 5.0) * r};
            HPoint x = c.embed(u), y = c.embed(v);
            double closed = intrinsic_distance(h, x, y, k);
            if (closed < 0.1 * r) continue;
            double oracle = discretized_path_length(h, x, y, k);
            worst = std::max(worst, std::fabs(closed - oracle) / closed);
        }
        add_check(rep, "flatness_vs_path_oracle", worst, 1e-5, tol_override);
    }

    {
        APReport ap = verify_AP(h, 1000, seed ^ 0x5bd1e995u, k);
        add_check(rep, "ap_on_horosphere", static_cast<double>(ap.failures), 0.5, tol_override);
    }

    {  // Euclidean triangle relations on the surface, hyperbolic defect off it
        double worst_flat = 0.0;
        double worst_defect = 0.0;
        int done = 0;
        while (done < 200) {
            ChartPt u1{rng.uniform(-2.0, 2.0) * r, rng.uniform(-2.0, 2.0) * r};
            ChartPt u2{rng.uniform(-2.0, 2.0) * r, rng.uniform(-2.0, 2.0) * r};
            ChartPt u3{rng.uniform(-2.0, 2.0) * r, rng.uniform(-2.0, 2.0) * r};
            double area = 0.5 * std::fabs((u2[0] - u1[0]) * (u3[1] - u1[1]) -
                                          (u2[1] - u1[1]) * (u3[0] - u1[0]));
            if (area < 0.05 * r * r) continue;
            ++done;
            TriangleCheck tc = euclidean_triangle_check(h, u1, u2, u3, k);
            worst_flat = std::max({worst_flat, tc.law_of_cosines, tc.angle_sum});
            double ambient = ambient_triangle_angle_sum(h, u1, u2, u3, k);
            worst_defect = std::max(worst_defect, ambient - (kPi - 1e-3));
        }
        add_check(rep, "euclidean_triangle_relations", worst_flat, 1e-8, tol_override);
        add_check(rep, "ambient_defect_contrast", std::max(worst_defect, 0.0), 1e-12,
                  tol_override);
    }

    {  // surface normals follow the pencil toward xi
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            ChartPt u{rng.uniform(-4.0, 4.0) * r, rng.uniform(-4.0, 4.0) * r};
            HPoint x = c.embed(u);
            Geodesic pencil = pencil_of(xi, x, k);
            Vec t1 = c.velocity(u, {1.0, 0.0}, 0.0);
            Vec t2 = c.velocity(u, {0.0, 1.0}, 0.0);
            t1 = t1 / std::sqrt(mdot(t1, t1));
            t2 = t2 - mdot(t2, t1) * t1;
            t2 = t2 / std::sqrt(mdot(t2, t2));
            Vec n = pencil.dir - mdot(pencil.dir, t1) * t1 - mdot(pencil.dir, t2) * t2;
            double cosdev = std::sqrt(std::max(mdot(n, n), 0.0));
            worst = std::max(worst, 1.0 - cosdev);
        }
        add_check(rep, "pencil_orthogonality", worst, 1e-9, tol_override);
    }

    {  // H^2 horocycle specialization: 1-D chart, arc length only
        IdealPoint xi2 = random_ideal(rng, 2);
        Horosphere h2{xi2, rng.uniform(0.6, 1.8)};
        HoroChart c2 = chart(h2, k);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            ChartPt u{rng.uniform(-4.0, 4.0) * r, 0.0};
            ChartPt v{rng.uniform(-4.0, 4.0) * r, 0.0};
            HPoint x = c2.embed(u), y = c2.embed(v);
            worst = std::max(worst, horosphere_residual(h2, x, k));
            double closed = intrinsic_distance(h2, x, y, k);
            if (closed < 0.1 * r) continue;
            double oracle = discretized_path_length(h2, x, y, k);
            worst = std::max(worst, std::fabs(closed - oracle) / closed);
        }
        add_check(rep, "h2_horocycle_arcs", worst, 1e-5, tol_override);
    }

    return rep;
}

SuiteReport suite_duality(std::uint64_t seed, Curvature k,
                          const std::optional<double>& tol_override) {
    SuiteReport rep{"duality", seed, {}};
    Rng rng(seed);

    {
        AccordanceReport acc = accordance_check(500, k, seed);
        add_check(rep, "accordance_500", acc.max_residual, 1e-9, tol_override);
    }

    {
        double worst = 0.0;
        Rng trng(seed ^ 0xa5a5a5a5u);
        for (int i = 0; i < 1000; ++i) {
            TriangleMeasurements t = synthesize_right_triangle(trng, {1.0});
            worst = std::max(worst, imaginary_substitution_residual(t.a, t.b, t.c, t.A, t.B));
        }
        add_check(rep, "imaginary_substitution_1000", worst, 1e-12, tol_override);
    }

    {
        Rng trng(seed ^ 0xdeadbeefu);
        TriangleMeasurements t = synthesize_right_triangle(trng, {1.0});
        double p = euclidean_limit_exponent(t, {10.0, 30.0, 100.0, 300.0});
        double off = std::max(0.0, std::max(1.9 - p, p - 2.1));
        add_check(rep, "euclidean_limit_exponent", off, 1e-12, tol_override);
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            TriangleMeasurements t = synthesize_spherical_right_triangle(rng, 1.0);
            worst = std::max(worst, spherical_right_residuals(t).max_abs());
        }
        add_check(rep, "spherical_sphere_oracle", worst, 1e-10, tol_override);
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            double d = 0.01 * std::pow(10.0 / 0.01, i / 99.0) * k.r;
            worst = std::max(worst, parallelism_identity_check(d, k));
        }
        add_check(rep, "parallelism_identity", worst, 1e-12, tol_override);
    }

    return rep;
}

SuiteReport suite_units(std::uint64_t seed, Curvature k,
                        const std::optional<double>& tol_override) {
    SuiteReport rep{"units", seed, {}};
    Registry reg = builtin_registry(k);
    Rng rng(seed);

    const UnitMap& e = reg.lookup("EPLANE", "ESPACE", "e");
    const UnitMap& h = reg.lookup("EPLANE", "ISPACE", "h");
    const UnitMap& c = reg.lookup("CIRCLE", "EPLANE", "c");
    const UnitMap& boost = reg.lookup("ISPACE", "ISPACE", "lorentz_boost");

    auto pointwise_dev = [](const UPoint& a, const UPoint& b) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
        return m;
    };

    {  // identity is neutral on both sides
        double worst = 0.0;
        for (const UnitMap* f : {&e, &h, &c, &boost}) {
            UnitMap lhs = compose(reg.lookup(f->source, f->source, "id"), *f);
            UnitMap rhs = compose(*f, reg.lookup(f->target, f->target, "id"));
            const Unit& src = reg.unit(f->source);
            for (int i = 0; i < 25; ++i) {
                UPoint x = src.sample(rng);
                worst = std::max(worst, pointwise_dev(lhs.apply(x), f->apply(x)));
                worst = std::max(worst, pointwise_dev(rhs.apply(x), f->apply(x)));
            }
        }
        add_check(rep, "category_identity", worst, 1e-12, tol_override);
    }

    {  // associativity on the chain CIRCLE -> EPLANE -> ISPACE -> ISPACE
        UnitMap lhs = compose(compose(c, h), boost);
        UnitMap rhs = compose(c, compose(h, boost));
        const Unit& src = reg.unit("CIRCLE");
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            UPoint x = src.sample(rng);
            worst = std::max(worst, pointwise_dev(lhs.apply(x), rhs.apply(x)));
        }
        add_check(rep, "category_associativity", worst, 1e-12, tol_override);
    }

    // every isometric-embedding claim in the registry verifies
    for (const UnitMap& m : reg.maps) {
        if (m.name == "id" || !m.claims.count(MapClaim::IsometricEmbedding)) continue;
        IsometryCheck chk = check_isometric(reg, m, 64, m.check_tol, seed);
        add_check(rep, "isometric_claim_" + m.name, chk.max_rel_deviation, m.check_tol,
                  tol_override);
    }

    {  // EPLANE instantiates into both ESPACE and ISPACE; no map between images
        InstantiationReport ir = compare_instantiations(reg, "EPLANE", e, h, 48, seed);
        double residual = (ir.f.pass && ir.g.pass && ir.targets_differ) ? 0.0 : 1.0;
        add_check(rep, "type_sharing_eplane", residual, 0.5, tol_override);
    }

    {  // the circle keeps its arc metric through the composite into ISPACE
        UnitMap ch = compose(c, h);
        IsometryCheck chk = check_isometric(reg, ch, 32, ch.check_tol, seed);
        add_check(rep, "composite_circle_arc_metric", chk.max_rel_deviation, ch.check_tol,
                  tol_override);
    }

    return rep;
}

}  // namespace

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"parallels", "horosphere", "duality", "units",
                                                   "all"};
    return names;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, Curvature k,
                      std::optional<double> tol_override) {
    check_curvature(k);
    if (suite == "parallels") return suite_parallels(seed, k, tol_override);
    if (suite == "horosphere") return suite_horosphere(seed, k, tol_override);
    if (suite == "duality") return suite_duality(seed, k, tol_override);
    if (suite == "units") return suite_units(seed, k, tol_override);
    if (suite == "all") {
        SuiteReport all{"all", seed, {}};
        for (const std::string& name : {std::string("parallels"), std::string("horosphere"),
                                        std::string("duality"), std::string("units")}) {
            SuiteReport sub = run_suite(name, seed, k, tol_override);
            for (Check& c : sub.checks) {
                c.name = name + "/" + c.name;
                all.checks.push_back(c);
            }
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

std::string report_to_json(const SuiteReport& rep) {
    nlohmann::json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    j["checks"] = nlohmann::json::array();
    for (const Check& c : rep.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["max_residual"] = c.max_residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        j["checks"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const SuiteReport& rep) {
    std::ostringstream out;
    int failures = 0;
    for (const Check& c : rep.checks) {
        char line[192];
        std::snprintf(line, sizeof line, "[%s] %-34s max_residual=%.6e tol=%.2e\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_residual, c.tolerance);
        out << line;
        if (!c.pass) ++failures;
    }
    char tail[128];
    std::snprintf(tail, sizeof tail, "suite=%s seed=%llu checks=%zu failures=%d\n",
                  rep.suite.c_str(), static_cast<unsigned long long>(rep.seed), rep.checks.size(),
                  failures);
    out << tail;
    return out.str();
}

}  // namespace horolab
