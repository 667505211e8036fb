#include <doctest.h>

#include "ruled/errors.hpp"
#include "ruled/surface.hpp"

using namespace ruled;

TEST_CASE("intersection form") {
    Curve c(0);
    RuledSurface s(c, Divisor::generic(-2)); // e = 2
    NumClass f{0, 1}, x0{1, 0};
    CHECK(s.intersect(f, f) == 0);
    CHECK(s.intersect(x0, f) == 1);
    CHECK(s.intersect(x0, x0) == -2);
    CHECK(s.intersect(NumClass{2, 3}, NumClass{1, 1}) == 1); // -4 + 2 + 3

    // symmetry and bilinearity over a small grid
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long a2 = -2; a2 <= 2; ++a2)
                for (long b2 = -2; b2 <= 2; ++b2) {
                    NumClass u{a, b}, v{a2, b2};
                    CHECK(s.intersect(u, v) == s.intersect(v, u));
                    NumClass w{a + a2, b + b2};
                    CHECK(s.intersect(w, v) == s.intersect(u, v) + s.intersect(NumClass{a2, b2}, v));
                }
}

TEST_CASE("scroll degree") {
    Curve g0(0);
    RuledSurface s1(g0, Divisor::generic(-1));
    CHECK(s1.scroll_degree({1, Divisor::generic(2)}) == 3); // cubic scroll
    RuledSurface s0(g0, Divisor{});
    CHECK(s0.scroll_degree({1, Divisor{}}) == 0);
    Curve g1(1);
    RuledSurface s2(g1, Divisor::generic(-1));
    CHECK(s2.scroll_degree({1, Divisor::generic(3)}) == 5);
    CHECK_THROWS_AS(s2.scroll_degree({2, Divisor{}}), PreconditionError);
}

TEST_CASE("sections from quotients") {
    Curve c(1);
    c.add_point("P");
    Divisor ec = -Divisor::point("P");
    RuledSurface s(c, ec);
    CHECK(s.section_from_quotient(ec) == s.x0());
    CHECK(s.section_from_quotient(Divisor{}) == s.x1()); // X1 ~ X0 - e_class f
    PicClass d = s.section_from_quotient(Divisor::generic(2));
    CHECK(c.degree(d.b) == 3);
    // deg(a) = X0 . D
    CHECK(s.intersect(s.x0(), d) == 2);
}

TEST_CASE("minimal section data") {
    Curve c(1);
    RuledSurface prod(c, Divisor{});
    MinSectionInfo mp = prod.min_section_info();
    CHECK_FALSE(mp.unique); // product surface P1 x X
    CHECK(mp.self_int == 0);

    Curve g0(0);
    RuledSurface s(g0, Divisor::generic(-2));
    MinSectionInfo m = s.min_section_info();
    CHECK(m.unique);
    CHECK(m.self_int == -2);
    CHECK(*m.x1_self_int == 2);
    CHECK(*m.other_section_min == 4); // any other section has D^2 >= e + 2
    CHECK(s.intersect(s.x1(), s.x1()) == 2);
}

TEST_CASE("normalization of a summand pair") {
    Curve c(0);
    auto [s, twist] = RuledSurface::normalized(c, Divisor::generic(3), Divisor::generic(1));
    CHECK(s.e() == 2);
    CHECK(c.degree(twist) == 3);
    CHECK_THROWS_AS(RuledSurface(c, Divisor::generic(1)), ScenarioError); // not normalized
}

TEST_CASE("segre bound enforcement") {
    Curve g1(1);
    // indecomposable surfaces only exist for -g <= e <= 2g-2
    CHECK_THROWS_AS(RuledSurface::transformed(
                        std::make_shared<RuledSurface>(g1, Divisor{}), ElmStep{"P", Position::OnX0},
                        Tri::False, 2, Divisor::generic(-2), "X0'"),
                    SegreBoundViolation);
}
