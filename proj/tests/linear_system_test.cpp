#include <doctest.h>

#include "ruled/elm.hpp"
#include "ruled/errors.hpp"
#include "ruled/linear_system.hpp"

using namespace ruled;

TEST_CASE("twist-sum dimensions on decomposable surfaces") {
    Curve g0(0);
    RuledSurface s(g0, Divisor::generic(-1)); // e = 1
    CHECK(h_i_decomposable(s, 1, Divisor::generic(2), 0).value() == 5); // 3 + 2
    CHECK(h_i_decomposable(s, 0, Divisor::generic(2), 0).value() == 3); // single summand

    Curve g1(1);
    RuledSurface t(g1, Divisor::generic(-1));
    Divisor b3 = Divisor::generic(3, Effectivity::Effective);
    CHECK(h_i_decomposable(t, 1, b3, 0).value() == 5); // 3 + 2
    CHECK(h_i_decomposable(t, 1, b3, 1).value() == 0);
}

TEST_CASE("h1 upper bound") {
    Curve g1(1);
    RuledSurface s(g1, Divisor::generic(-1));
    CHECK(h_i_upper_bound(s, 1, Divisor::generic(3), 1).value() == 0); // both nonspecial

    Curve g2(2);
    g2.add_class_symbol("K", 2);
    g2.tabulate_h0(Divisor::point("K"), 2);
    RuledSurface prod(g2, Divisor{});
    Count bound = h_i_upper_bound(prod, 1, Divisor::point("K"), 1);
    CHECK_FALSE(bound.exact());
    CHECK(bound.lo == 0);
    CHECK(bound.hi == 2); // h1(K) twice
}

TEST_CASE("h0 on chains: the indecomposable elliptic surface") {
    Curve c(1);
    c.add_point("P");
    auto anchor = std::make_shared<RuledSurface>(c, -Divisor::point("P"));
    auto s = std::make_shared<RuledSurface>(
        transform_surface(anchor, {"P", Position::OffBothBasePointFiber}));
    PicClass h{1, Divisor::generic(2, Effectivity::Effective)};
    // chain recursion: h0(S', H) = h0(S, X0 + (b+P)f) - 1 = (3 + 2) - 1
    CHECK(h0_chain(*s, h).value() == 4);
    // independent route: b nonspecial, so h0 = h0(b) + h0(b + e_class')
    CHECK(h0_system(*s, h).value() == 4);

    // the minimal section of the transform: h0(X0 + Pf) = 2 on the anchor,
    // the center is off the lone base point (which sits on X1), so one drop
    PicClass min_sec{1, Divisor{}};
    CHECK(h0_chain(*s, min_sec).value() == 1); // unique section
}

TEST_CASE("base locus on decomposable surfaces") {
    // fixed generator from a common base point: g=1, e=0, e_class=0, b=P
    Curve c(1);
    c.add_point("P");
    RuledSurface prod(c, Divisor{});
    auto entries = base_locus(prod, 1, Divisor::point("P"));
    bool fixed = false;
    for (const auto& e : entries)
        if (e.P == "P" && e.kind == BaseLocusKind::FixedGenerator) fixed = true;
    CHECK(fixed);
    CHECK(is_bpf_system(prod, 1, Divisor::point("P")) == Tri::False);
    CHECK(generic_member_irreducible(prod, Divisor::point("P")) == Tri::False);

    // free everywhere when both twists are bpf
    Curve g0(0);
    g0.add_point("P");
    RuledSurface s(g0, Divisor::generic(-1));
    for (const auto& e : base_locus(s, 1, Divisor::generic(2)))
        CHECK(e.kind == BaseLocusKind::FreeOnGenerator);
    CHECK(is_bpf_system(s, 1, Divisor::generic(2)) == Tri::True);
}

TEST_CASE("base point located on X0 via the top twist") {
    Curve c(2);
    c.add_point("P");
    c.add_class_symbol("B", 4);
    c.tabulate_h0(Divisor::point("B"), 3); // forced by RR anyway
    c.tabulate_h0(Divisor::point("B") - Divisor::point("P", 2), 2); // the pencil through 2P
    RuledSurface s(c, -Divisor::point("P")); // e = 1, top twist B - P
    auto entries = base_locus(s, 1, Divisor::point("B"));
    bool on_x0 = false;
    for (const auto& e : entries)
        if (e.P == "P" && e.kind == BaseLocusKind::PointOnX0) on_x0 = true;
    CHECK(on_x0);
    CHECK(is_bpf_system(s, 1, Divisor::point("B")) == Tri::False);
}

TEST_CASE("irreducibility of sections") {
    Curve g0(0);
    RuledSurface s(g0, Divisor::generic(-1));
    CHECK(generic_member_irreducible(s, Divisor{}) == Tri::True);            // X0 itself
    CHECK(generic_member_irreducible(s, Divisor::generic(1)) == Tri::True);  // X1's class
    CHECK(generic_member_irreducible(s, Divisor::generic(2)) == Tri::True);  // bpf summands
}

TEST_CASE("very ampleness criteria") {
    Curve g0(0);
    RuledSurface s(g0, Divisor::generic(-1));
    std::string crit;
    CHECK(is_very_ample_surface(s, 2, Divisor::generic(3), &crit) == Tri::True);
    CHECK(crit == "m-secant summand criterion (iff)");
    CHECK(is_very_ample_surface(s, 2, Divisor::generic(2), &crit) == Tri::False);

    Curve g1(1);
    RuledSurface t(g1, Divisor::generic(-1));
    CHECK(is_very_ample_surface(t, 1, Divisor::generic(3), &crit) == Tri::False);
    // degree-2 top twist on an elliptic curve is never very ample
}

TEST_CASE("isomorphism locus") {
    Curve g0(0);
    RuledSurface s(g0, Divisor::generic(-1));
    IsoLocus k = isomorphism_locus(s, {1, Divisor::generic(2)});
    CHECK(k.empty == Tri::True); // cubic scroll is an embedding

    // elliptic scroll with deg-3 twist: isomorphism off X0, X0 doubled
    Curve g1(1);
    RuledSurface t(g1, Divisor::generic(-1));
    IsoLocus k2 = isomorphism_locus(t, {1, Divisor::generic(3)});
    CHECK(k2.empty == Tri::False);
    REQUIRE_FALSE(k2.components.empty());
    CHECK(k2.components.front().label == "X0");
    CHECK(k2.note == "isomorphism on S minus X0");

    // cone: X0 contracted to the vertex
    Curve g2(2);
    Divisor b = Divisor::generic(5, Effectivity::Effective);
    RuledSurface cone(g2, -b);
    IsoLocus k3 = isomorphism_locus(cone, {1, b});
    CHECK(k3.empty == Tri::False);
    REQUIRE_FALSE(k3.components.empty());
    CHECK(k3.components.front().label == "X0");
    CHECK(k3.note.find("cone") != std::string::npos);

    CHECK_THROWS_AS(isomorphism_locus(cone, {1, Divisor::generic(1)}), NotBasePointFree);
}

TEST_CASE("singularity taxonomy stays empty for embeddings") {
    Curve g0(0);
    RuledSurface s(g0, Divisor::generic(-1));
    SingularityReport rep = singularity_report(s, {1, Divisor::generic(2)});
    CHECK(rep.entries.empty());
    CHECK(rep.birational == Tri::True);
}

TEST_CASE("classify assembles a coherent report") {
    Curve g0(0);
    RuledSurface s(g0, Divisor::generic(-1));
    LinearSystemReport r = classify(s, {1, Divisor::generic(2)});
    CHECK(r.h0.value() == 5);
    CHECK(r.h1.value() == 0);
    CHECK(r.degree == 3);
    CHECK(r.bpf == Tri::True);
    CHECK(r.very_ample == Tri::True);
    CHECK(r.generic_member_irreducible == Tri::True);
    // report invariants
    for (const auto& e : r.base_locus)
        if (e.kind == BaseLocusKind::FixedGenerator) CHECK(r.bpf == Tri::False);
    if (r.very_ample == Tri::True) CHECK(r.bpf == Tri::True);
}
