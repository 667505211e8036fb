#include <doctest.h>

#include "ruled/errors.hpp"
#include "ruled/linear_system.hpp"
#include "ruled/speciality.hpp"

using namespace ruled;

namespace {

Curve genus2_with_canonical() {
    Curve c(2);
    c.add_class_symbol("K", 2);
    c.tabulate_h0(Divisor::point("K"), 2);
    return c;
}

} // namespace

TEST_CASE("speciality of rational and nonspecial scrolls") {
    Curve g0(0);
    RuledSurface s(g0, Divisor::generic(-1));
    CHECK(speciality(s, {1, Divisor::generic(2)}).value() == 0);

    Curve g1(1);
    RuledSurface t(g1, Divisor::generic(-1));
    CHECK(speciality(t, {1, Divisor::generic(3, Effectivity::Effective)}).value() == 0);
}

TEST_CASE("cone speciality") {
    Curve g1(1);
    CHECK(cone_speciality(g1, Divisor::generic(3)).value() == 1);

    Curve g2 = genus2_with_canonical();
    CHECK(cone_speciality(g2, Divisor::point("K")).value() == 3); // g + h1(K)
    CHECK(cone_speciality(g2, Divisor::generic(5)).value() == 2); // nonspecial b

    Curve g0(0);
    CHECK_THROWS_AS(cone_speciality(g0, Divisor::generic(3)), PreconditionError);
}

TEST_CASE("projection deltas and the ledger") {
    CHECK(projection_delta(1, 0) == 0); // one point in general position
    CHECK(projection_delta(3, 1) == 1); // three collinear points
    CHECK(projection_delta(2, 1) == 0);
    CHECK_THROWS_AS(projection_delta(1, 1), MalformedCycle);
    CHECK_THROWS_AS(projection_delta(0, 0), MalformedCycle);

    SpecialityLedger ledger(Count::of(1));
    SpecialityLedger after = ledger.with_projection(3, 1).with_projection(1, 0);
    CHECK(ledger.events().empty()); // appending is persistent
    REQUIRE(after.events().size() == 2);
    CHECK(after.current().value() == 2);
    long sum = 0;
    for (const auto& ev : after.events()) {
        CHECK(ev.delta >= 0);
        sum += ev.delta;
    }
    CHECK(after.current().value() == after.anchor().value() + sum);
}

TEST_CASE("cone recognition") {
    Curve g2 = genus2_with_canonical();
    Divisor b = Divisor::generic(5, Effectivity::Effective);
    RuledSurface cone(g2, -b);
    CHECK(is_cone_test(cone, {1, b}) == Tri::True);

    // elliptic quintic scroll: very ample, generators never meet
    Curve g1(1);
    RuledSurface quintic(g1, Divisor::generic(-1));
    PicClass h{1, Divisor::generic(3)};
    CHECK(is_cone_test(quintic, h) == Tri::False);

    Curve g0(0);
    RuledSurface rational(g0, Divisor::generic(-1));
    CHECK_THROWS_AS(is_cone_test(rational, {1, Divisor::generic(2)}), PreconditionError);
}

TEST_CASE("directrix speciality bound") {
    // cone over the canonical genus-2 curve: H restricted to X1 is K
    Curve g2 = genus2_with_canonical();
    Divisor K = Divisor::point("K");
    RuledSurface cone(g2, -K);
    PicClass h{1, K};
    DirectrixBoundWitness w = directrix_speciality_bound_check(cone, h, cone.x1());
    CHECK(w.restricted_class == g2.canonical(K));
    CHECK(w.curve_h1.value() == 1);
    CHECK(w.scroll_i.value() == 3); // g + h1(K)
    CHECK(w.within_bound == Tri::True);

    // nonspecial scroll: the bound is by zero
    Curve g1(1);
    RuledSurface t(g1, Divisor::generic(-1));
    PicClass h2{1, Divisor::generic(3)};
    DirectrixBoundWitness w2 = directrix_speciality_bound_check(t, h2, t.x1());
    CHECK(w2.scroll_i.value() == 0);
    CHECK(w2.curve_h1.value() == 0);
    CHECK(w2.within_bound == Tri::True);
}

TEST_CASE("special directrix search") {
    // g=2, d=8, i=1: b of degree 6, top twist K
    Curve g2 = genus2_with_canonical();
    Divisor b = Divisor::generic(6, Effectivity::Effective);
    Divisor ec = Divisor::point("K") - b; // deg -4
    RuledSurface s(g2, ec);
    PicClass h{1, b};
    CHECK(s.scroll_degree(h) == 8);
    CHECK(speciality(s, h).value() == 1);
    SpecialDirectrixReport r = special_directrix_search(s, h);
    CHECK(r.applicable);
    CHECK(r.a == 2);
    CHECK(r.feasible);
    CHECK(r.degree_bound == 2); // 2g - 2
    CHECK(r.other_section_min == 4);
    CHECK(r.directrix_speciality == 1);
    CHECK(r.unique);
    CHECK(r.minimal_degree);
    CHECK(r.linearly_normal);

    // g=1, d=4, i=1: cone over a plane cubic
    Curve g1(1);
    Divisor b3 = Divisor::generic(4, Effectivity::Effective);
    RuledSurface cone(g1, -b3);
    SpecialDirectrixReport r2 = special_directrix_search(cone, {1, b3});
    CHECK(r2.applicable);
    CHECK(r2.a == 1);
    CHECK(r2.feasible);

    // hypothesis gate: nonspecial scroll
    RuledSurface t(g1, Divisor::generic(-1));
    SpecialDirectrixReport r3 = special_directrix_search(t, {1, Divisor::generic(3)});
    CHECK_FALSE(r3.applicable);
    CHECK(r3.reason.find("nonspecial") != std::string::npos);
}

TEST_CASE("decomposable nonspecial scrolls have speciality zero") {
    for (int g = 0; g <= 2; ++g) {
        Curve c(g);
        for (long e = 0; e <= 2; ++e) {
            RuledSurface s(c, Divisor::generic(-e));
            for (long db = 2 * g - 1 + e; db <= 2 * g + e + 2; ++db) {
                // both twists nonspecial by degree
                CHECK(speciality(s, {1, Divisor::generic(db)}).value() == 0);
            }
        }
    }
}
