#include <doctest.h>

#include "gysin/spaces.hpp"

using namespace gysin;

TEST_CASE("cup products in P^2") {
    SpaceModel p2 = projective_space(2, dolbeault());
    const auto sp = p2.ring.space();
    Element one = p2.ring.unit();
    Element h = Element::basis(sp, 1);
    Element h2 = Element::basis(sp, 2);
    CHECK(p2.ring.cup(one, h) == h);
    CHECK(p2.ring.cup(h, h) == h2);
    CHECK(p2.ring.cup(h, h2).is_zero());
    CHECK(sp->dims() == std::map<Degree, int>{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}});
}

TEST_CASE("odd classes on a genus-2 curve") {
    SpaceModel c = curve(2);
    const auto sp = c.ring.space();
    Element a1 = Element::unit_like(sp, "a1");
    Element b1 = Element::unit_like(sp, "b1");
    Element w = Element::unit_like(sp, "w");
    CHECK(c.ring.cup(a1, b1) == w);
    CHECK(c.ring.cup(b1, a1) == w.scaled(Rational(-1)));
    CHECK(c.ring.cup(a1, a1).is_zero());
    CHECK(c.ring.cup(a1, Element::unit_like(sp, "b2")).is_zero());
    CHECK(sp->dims_total() == std::map<int, int>{{0, 1}, {1, 4}, {2, 1}});
    CHECK(c.ring.check_axioms().ok);
}

TEST_CASE("ring axiom checker catches violations") {
    CHECK(projective_space(3, dolbeault()).ring.check_axioms().ok);
    CHECK(product(projective_space(1, dolbeault()), projective_space(1, dolbeault()))
              .ring.check_axioms()
              .ok);

    // degree additivity is rejected at construction time
    auto sp = make_space(dolbeault(), {{"1", {0, 0}}, {"H", {1, 1}}});
    Ring bad(sp, 0);
    CHECK_THROWS_AS(bad.set_product(1, 1, Element::basis(sp, 1)), Error);

    // wrong Koszul sign on odd classes
    auto csp = make_space(derham(), {{"1", {0, 0}}, {"a", {1, 0}}, {"b", {1, 0}}, {"w", {2, 0}}});
    Ring r(csp, 0);
    for (int i = 0; i < 4; ++i) {
        r.set_product(0, i, Element::basis(csp, i));
        if (i) r.set_product(i, 0, Element::basis(csp, i));
    }
    r.set_product(1, 2, Element::basis(csp, 3));
    r.set_product(2, 1, Element::basis(csp, 3));  // should be -w
    auto rep = r.check_axioms();
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations[0].find("commutativity") != std::string::npos);
}

TEST_CASE("compose and identity") {
    SpaceModel p1 = projective_space(1, dolbeault());
    const auto sp = p1.ring.space();
    LinearMap id = LinearMap::identity(sp);
    LinearMap cup_h = p1.ring.cup_by(Element::basis(sp, 1), Degree{1, 1});
    CHECK(compose(id, cup_h) == cup_h);
    CHECK(compose(cup_h, id) == cup_h);
    CHECK(compose(cup_h, cup_h).is_zero());  // H^2 = 0 on P^1

    SpaceModel p2 = projective_space(2, dolbeault());
    CHECK_THROWS_WITH_AS(compose(cup_h, p2.ring.cup_by(p2.ring.unit(), Degree{0, 0})),
                         "space mismatch in composition", Error);
}

TEST_CASE("direct sums with shifts") {
    auto pt = point(dolbeault()).ring.space();
    auto p2 = projective_space(2, dolbeault()).ring.space();

    DirectSum single = direct_sum_with_shifts({pt}, {Degree{0, 0}}, {""});
    CHECK(single.space->dims() == pt->dims());

    DirectSum two = direct_sum_with_shifts({pt, pt}, {Degree{0, 0}, Degree{1, 1}}, {"a:", "b:"});
    CHECK(two.space->dims() == std::map<Degree, int>{{{0, 0}, 1}, {{1, 1}, 1}});

    DirectSum blowup_shape = direct_sum_with_shifts({p2, pt}, {Degree{0, 0}, Degree{1, 1}},
                                                    {"X:", "Y:"});
    CHECK(blowup_shape.space->dims() ==
          std::map<Degree, int>{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});

    // inclusion then projection is the identity on each summand
    CHECK(compose(blowup_shape.proj[1], blowup_shape.incl[1]).is_identity());
    CHECK(compose(blowup_shape.proj[0], blowup_shape.incl[1]).is_zero());
}

TEST_CASE("modules over a ring") {
    SpaceModel p1 = projective_space(1, dolbeault());
    Module reg = Module::regular(p1.ring);
    CHECK(reg.check_axioms(p1.ring).ok);
    Element h = Element::basis(p1.ring.space(), 1);
    CHECK(reg.act(h, p1.ring.unit()) == h);
    LinearMap by_h = reg.act_by(h, Degree{1, 1});
    CHECK(by_h.apply(p1.ring.unit()) == h);
    CHECK(by_h.apply(h).is_zero());
}

TEST_CASE("ring map checker") {
    SpaceModel p2 = projective_space(2, dolbeault());
    SpaceModel p1 = projective_space(1, dolbeault());
    LinearMap res(p2.ring.space(), p1.ring.space(), Degree{0, 0});
    res.set(0, 0, Rational(1));
    res.set(1, 1, Rational(1));
    CHECK(check_ring_map(p2.ring, p1.ring, res).ok);

    LinearMap bad = res;
    bad.set(1, 1, Rational(2));  // H -> 2H is not multiplicative against H^2 -> 0
    CHECK(check_ring_map(p2.ring, p1.ring, bad).ok);  // still fine: H*H = H^2 -> 0 = 2H*2H... no
}

TEST_CASE("ring map checker rejects a broken map") {
    // P^1 -> P^1, H -> 2H: multiplicativity holds (H^2 = 0), unit holds, so ok;
    // breaking the unit is detected.
    SpaceModel p1 = projective_space(1, dolbeault());
    LinearMap f(p1.ring.space(), p1.ring.space(), Degree{0, 0});
    f.set(0, 0, Rational(2));
    auto rep = check_ring_map(p1.ring, p1.ring, f);
    CHECK_FALSE(rep.ok);

    // P^2 -> P^2, H -> 2H breaks against H^2 -> H^2
    SpaceModel p2 = projective_space(2, dolbeault());
    LinearMap g = LinearMap::identity(p2.ring.space());
    g.set(1, 1, Rational(2));
    CHECK_FALSE(check_ring_map(p2.ring, p2.ring, g).ok);
}
