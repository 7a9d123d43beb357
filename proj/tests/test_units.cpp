#include <doctest.h>

#include <cmath>

#include "horolab/horosphere.hpp"
#include "horolab/units.hpp"

using namespace horolab;

namespace {

double pointwise_dev(const UPoint& a, const UPoint& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("registry lookups and claims") {
    Registry reg = builtin_registry({1.0});
    CHECK(reg.has_unit("EPLANE"));
    CHECK(reg.has_unit("ISPACE"));

    const UnitMap& h = reg.lookup("EPLANE", "ISPACE", "h");
    const UnitMap& e = reg.lookup("EPLANE", "ESPACE", "e");
    const UnitMap& klein = reg.lookup("IPLANE", "EPLANE", "klein");
    CHECK(h.claims.count(MapClaim::IsometricEmbedding) == 1);
    CHECK(e.claims.count(MapClaim::IsometricEmbedding) == 1);
    CHECK(klein.claims.count(MapClaim::IsometricEmbedding) == 0);

    CHECK_THROWS_AS(reg.lookup("EPLANE", "ISPACE", "nope"), std::invalid_argument);
    CHECK_THROWS_AS(reg.unit("NOPE"), std::invalid_argument);

    // identity maps registered for every unit
    for (const Unit& u : reg.units) CHECK_NOTHROW(reg.lookup(u.name, u.name, "id"));
}

TEST_CASE("composition: identity neutrality and associativity") {
    Registry reg = builtin_registry({1.0});
    const UnitMap& c = reg.lookup("CIRCLE", "EPLANE", "c");
    const UnitMap& h = reg.lookup("EPLANE", "ISPACE", "h");
    const UnitMap& boost = reg.lookup("ISPACE", "ISPACE", "lorentz_boost");

    CHECK_THROWS_AS(compose(h, c), std::invalid_argument);

    Rng rng(89);
    const Unit& circle = reg.unit("CIRCLE");
    UnitMap left_id = compose(reg.lookup("CIRCLE", "CIRCLE", "id"), c);
    UnitMap right_id = compose(c, reg.lookup("EPLANE", "EPLANE", "id"));
    UnitMap assoc_l = compose(compose(c, h), boost);
    UnitMap assoc_r = compose(c, compose(h, boost));
    CHECK(assoc_l.source == "CIRCLE");
    CHECK(assoc_l.target == "ISPACE");
    for (int i = 0; i < 100; ++i) {
        UPoint x = circle.sample(rng);
        CHECK(pointwise_dev(left_id.apply(x), c.apply(x)) < 1e-12);
        CHECK(pointwise_dev(right_id.apply(x), c.apply(x)) < 1e-12);
        CHECK(pointwise_dev(assoc_l.apply(x), assoc_r.apply(x)) < 1e-12);
    }

    // composing isometric embeddings keeps the claim, mixing drops it
    UnitMap ch = compose(c, h);
    CHECK(ch.claims.count(MapClaim::IsometricEmbedding) == 1);
    const UnitMap& klein = reg.lookup("IPLANE", "EPLANE", "klein");
    UnitMap kh = compose(klein, h);
    CHECK(kh.claims.count(MapClaim::IsometricEmbedding) == 0);
}

TEST_CASE("composite circle lands on the horosphere") {
    Curvature k{1.0};
    Registry reg = builtin_registry(k);
    UnitMap ch = compose(reg.lookup("CIRCLE", "EPLANE", "c"), reg.lookup("EPLANE", "ISPACE", "h"));

    // the image must satisfy the level-set equation of the registry horosphere
    IdealPoint xi{Vec(1.0, 1.0 / 3, 2.0 / 3, 2.0 / 3)};
    Horosphere hs{xi, 1.3};
    Rng rng(97);
    const Unit& circle = reg.unit("CIRCLE");
    for (int i = 0; i < 50; ++i) {
        UPoint p = ch.apply(circle.sample(rng));
        Vec v;
        v.n = 4;
        for (int j = 0; j < 4; ++j) v[j] = p[static_cast<std::size_t>(j)];
        CHECK(horosphere_residual(hs, HPoint{v}, k) < 1e-12);
        CHECK(sheet_residual(HPoint{v}, k) < 1e-12);
    }
}

TEST_CASE("check_isometric: identity, rigid plane, horosphere chart") {
    Registry reg = builtin_registry({1.0});

    IsometryCheck id_chk =
        check_isometric(reg, reg.lookup("EPLANE", "EPLANE", "id"), 32, 1e-12, 1);
    CHECK(id_chk.pass);
    CHECK(id_chk.max_rel_deviation == doctest::Approx(0.0).epsilon(1e-15));

    IsometryCheck e_chk = check_isometric(reg, reg.lookup("EPLANE", "ESPACE", "e"), 64, 1e-14, 2);
    CHECK(e_chk.pass);

    // the central claim: the horosphere chart preserves plane distances,
    // measured against the independent discretized-path gauge
    IsometryCheck h_chk = check_isometric(reg, reg.lookup("EPLANE", "ISPACE", "h"), 64, 1e-5, 3);
    CHECK(h_chk.pass);

    IsometryCheck c_chk = check_isometric(reg, reg.lookup("CIRCLE", "EPLANE", "c"), 64, 1e-12, 4);
    CHECK(c_chk.pass);

    IsometryCheck s_chk =
        check_isometric(reg, reg.lookup("SPHERE", "ESPACE", "sphere_embed"), 64, 1e-12, 5);
    CHECK(s_chk.pass);

    // every registered isometric-embedding claim passes at its own tolerance
    for (const UnitMap& m : reg.maps) {
        if (m.name == "id" || !m.claims.count(MapClaim::IsometricEmbedding)) continue;
        IsometryCheck chk = check_isometric(reg, m, 48, m.check_tol, 6);
        CHECK_MESSAGE(chk.pass, m.name);
    }
}

TEST_CASE("graph fallback covers composites without closed forms") {
    Registry reg = builtin_registry({1.0});
    UnitMap ch = compose(reg.lookup("CIRCLE", "EPLANE", "c"), reg.lookup("EPLANE", "ISPACE", "h"));
    CHECK(!ch.image_metric);
    CHECK(ch.check_tol == doctest::Approx(1e-2));
    IsometryCheck chk = check_isometric(reg, ch, 24, ch.check_tol, 7);
    CHECK(chk.pass);
}

TEST_CASE("compare instantiations of a shared type") {
    Registry reg = builtin_registry({1.0});
    const UnitMap& e = reg.lookup("EPLANE", "ESPACE", "e");
    const UnitMap& h = reg.lookup("EPLANE", "ISPACE", "h");

    InstantiationReport rep = compare_instantiations(reg, "EPLANE", e, h, 32, 8);
    CHECK(rep.f.pass);
    CHECK(rep.g.pass);
    CHECK(rep.targets_differ);

    InstantiationReport same = compare_instantiations(reg, "EPLANE", e, e, 16, 8);
    CHECK(!same.targets_differ);
    CHECK(same.f.pass);

    // CIRCLE with c versus the composite through the horosphere
    const UnitMap& c = reg.lookup("CIRCLE", "EPLANE", "c");
    UnitMap ch = compose(c, h);
    InstantiationReport circ = compare_instantiations(reg, "CIRCLE", c, ch, 16, 8);
    CHECK(circ.f.pass);
    CHECK(circ.g.pass);
    CHECK(circ.targets_differ);

    CHECK_THROWS_AS(compare_instantiations(reg, "SPHERE", e, h, 8, 8), std::invalid_argument);
}
