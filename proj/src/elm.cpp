#include "ruled/elm.hpp"

#include <algorithm>

#include "ruled/errors.hpp"

namespace ruled {

namespace {

void require_point(const Curve& c, const std::string& P) {
    if (!c.has_point(P) && !is_generic_point_name(P))
        throw ScenarioError("transform center over undeclared point '" + P + "'");
}

bool lowers_e(const RuledSurface& parent, Position pos) {
    switch (pos) {
        case Position::OnX1:
        case Position::OffBothGenericFiber:
            return parent.e() >= 1; // e = 0 flips to e' = 1 instead
        case Position::OffBothBasePointFiber:
            return true;
        default:
            return false;
    }
}

bool is_zero_flip(const RuledSurface& parent, Position pos) {
    return parent.e() == 0 &&
           (pos == Position::OnX1 || pos == Position::OffBothGenericFiber);
}

} // namespace

RuledSurface transform_surface(std::shared_ptr<const RuledSurface> s, const ElmStep& step) {
    const RuledSurface& parent = *s;
    const Curve& curve = parent.curve();
    require_point(curve, step.P);
    const Divisor p = Divisor::point(step.P);
    const Divisor& ec = parent.e_class();

    switch (step.position) {
        case Position::OnX0:
            if (parent.decomposable() != Tri::True)
                throw InvalidPosition("OnX0 needs a certified decomposable surface; use OnMinSection");
            return RuledSurface::transformed(std::move(s), step, Tri::True, parent.e() + 1, ec - p,
                                             "X0'");
        case Position::OnMinSection: {
            long e1 = parent.e() + 1;
            Tri dec = parent.decomposable() == Tri::True
                          ? Tri::True
                          : (e1 > 2 * parent.genus() - 2 ? Tri::True : Tri::Unknown);
            return RuledSurface::transformed(std::move(s), step, dec, e1, ec - p, "X0'");
        }
        case Position::OnX1:
        case Position::OffBothGenericFiber: {
            if (parent.decomposable() != Tri::True)
                throw InvalidPosition(std::string(to_string(step.position)) +
                                      " needs a certified decomposable surface");
            if (step.position == Position::OffBothGenericFiber) {
                const Divisor me = -ec;
                if (curve.h0(me).at_least(1) != Tri::True)
                    throw InvalidPosition("OffBothGenericFiber needs h0(-e_class) > 0");
                if (curve.is_base_point(me, step.P) != Tri::False)
                    throw InvalidPosition("OffBothGenericFiber needs '" + step.P +
                                          "' certified not a base point of |-e_class|");
            }
            if (is_zero_flip(parent, step.position))
                // e = 0: the transform of X1 becomes the new minimal section.
                return RuledSurface::transformed(std::move(s), step, Tri::True, 1, -ec - p, "X1'");
            return RuledSurface::transformed(std::move(s), step, Tri::True, parent.e() - 1, ec + p,
                                             "X0'");
        }
        case Position::OffBothBasePointFiber: {
            if (parent.decomposable() != Tri::True)
                throw InvalidPosition("OffBothBasePointFiber needs a certified decomposable surface");
            if (curve.is_base_point(-ec, step.P) != Tri::True)
                throw InvalidPosition("OffBothBasePointFiber needs '" + step.P +
                                      "' certified a base point of |-e_class|");
            return RuledSurface::transformed(std::move(s), step, Tri::False, parent.e() - 1, ec + p,
                                             "X0'");
        }
        case Position::OffMinSection:
            throw InvalidPosition("OffMinSection carries no transform rule; declare OnX1 or an "
                                  "OffBoth* flag on a decomposable surface");
        default:
            throw InvalidPosition("transform position is Unknown");
    }
}

PicClass transform_class(const RuledSurface& s_prime, const PicClass& c, long mu) {
    if (!s_prime.is_chain())
        throw PreconditionError("NoStep", "transform_class needs a chain surface");
    const ElmStep& step = *s_prime.step();
    const RuledSurface& parent = *s_prime.parent();
    long n = c.m;
    if (mu < 0 || (n >= 1 && mu > n) || (n == 0 && mu != 0))
        throw PreconditionError("BadMultiplicity",
                                "multiplicity " + std::to_string(mu) + " invalid for m=" + std::to_string(n));
    const Divisor p = Divisor::point(step.P);
    if (is_zero_flip(parent, step.position))
        return {n, c.b + n * parent.e_class() + (n - mu) * p};
    if (lowers_e(parent, step.position)) return {n, c.b - mu * p};
    return {n, c.b + (n - mu) * p}; // e goes up
}

long transformed_intersection(long cd, long n, long m, long mu_c, long mu_d) {
    if (mu_c < 0 || mu_d < 0 || (n >= 1 && mu_c > n) || (m >= 1 && mu_d > m))
        throw PreconditionError("BadMultiplicity", "multiplicity out of range");
    return cd + n * m - n * mu_d - m * mu_c;
}

Divisor transformed_section_intersection_divisor(const Divisor& b, SectionIncidence inc,
                                                 const std::string& P) {
    switch (inc) {
        case SectionIncidence::BothThrough: return b - Divisor::point(P);
        case SectionIncidence::NeitherThrough: return b + Divisor::point(P);
        default: return b;
    }
}

ElmStep inverse_of(const RuledSurface& s_prime) {
    if (!s_prime.is_chain())
        throw PreconditionError("NoStep", "inverse_of needs a chain surface");
    const ElmStep& step = *s_prime.step();
    const RuledSurface& parent = *s_prime.parent();
    switch (step.position) {
        case Position::OnX0:
        case Position::OnMinSection:
            return {step.P, Position::OnX1};
        case Position::OnX1:
        case Position::OffBothGenericFiber:
            if (parent.e() == 0) return {step.P, Position::OnX1}; // flip is its own inverse shape
            return {step.P, Position::OnX0};
        case Position::OffBothBasePointFiber:
            return {step.P, Position::OnMinSection};
        default:
            throw InvalidPosition("stored step has no inverse");
    }
}

std::shared_ptr<const RuledSurface> inverse_step(const RuledSurface& s_prime) {
    const ElmStep inv = inverse_of(s_prime);
    const RuledSurface& parent = *s_prime.parent();
    const Curve& curve = s_prime.curve();
    const Divisor p = Divisor::point(inv.P);

    // Arithmetic inversion, checked against the stored parent.
    long e_back;
    Divisor ec_back;
    switch (inv.position) {
        case Position::OnX1:
            if (s_prime.e() >= 1 && !is_zero_flip(*s_prime.parent(), s_prime.step()->position)) {
                e_back = s_prime.e() - 1;
                ec_back = s_prime.e_class() + p;
            } else {
                // undoing the e = 0 flip: e' = 1, e'' = 0
                e_back = 0;
                ec_back = -s_prime.e_class() - p;
            }
            break;
        case Position::OnX0:
        case Position::OnMinSection:
            e_back = s_prime.e() + 1;
            ec_back = s_prime.e_class() - p;
            break;
        default:
            throw InvalidPosition("stored step has no inverse");
    }
    if (e_back != parent.e())
        throw UnresolvableChain("inverse step recovers e=" + std::to_string(e_back) +
                                ", parent has e=" + std::to_string(parent.e()));
    if (!(curve.canonical(ec_back) == parent.e_class()))
        throw UnresolvableChain("inverse step recovers invariant class " +
                                curve.canonical(ec_back).str() + ", parent has " +
                                parent.e_class().str());
    return s_prime.parent();
}

std::pair<RuledSurface, PicClass> project_scroll(std::shared_ptr<const RuledSurface> s,
                                                 const PicClass& h, const ElmStep& step,
                                                 bool smooth_image) {
    if (h.m != 1)
        throw PreconditionError("NotUnisecant", "projection needs a unisecant system");
    if (!smooth_image)
        throw SingularCenter("center '" + step.P + "' (" + to_string(step.position) +
                             ") not certified a smooth image point");
    long d = s->scroll_degree(h);
    RuledSurface s_prime = transform_surface(std::move(s), step);
    PicClass h_prime = transform_class(s_prime, h, 1);
    long d_prime = s_prime.scroll_degree(h_prime);
    if (d_prime != d - 1)
        throw UnresolvableChain("projection degree " + std::to_string(d_prime) + " != " +
                                std::to_string(d - 1));
    return {std::move(s_prime), std::move(h_prime)};
}

std::vector<ElmStep> nagata_chain(const RuledSurface& s) {
    if (s.decomposable() != Tri::True)
        throw PreconditionError("NotDecomposable", "normal-form chain needs a decomposable surface");
    const Curve& curve = s.curve();
    Divisor me = curve.canonical(-s.e_class());
    me.normalize();
    if (me.residual != 0)
        throw AliasRequired("-e_class has an unnamed residual of degree " +
                            std::to_string(me.residual));
    std::vector<ElmStep> steps;
    for (const auto& [sym, c] : me.syms) {
        if (c < 0 || !curve.has_point(sym))
            throw AliasRequired("-e_class is not a nonnegative sum of named points: " + me.str());
        for (long i = 0; i < c; ++i) steps.push_back({sym, Position::OnX0});
    }
    if ((long)steps.size() != s.e())
        throw AliasRequired("-e_class decomposes into " + std::to_string(steps.size()) +
                            " points but e=" + std::to_string(s.e()));
    return steps;
}

long steps_to_certified_decomposable(const RuledSurface& s) {
    if (s.decomposable() == Tri::True) return 0;
    return std::max(0L, 2L * s.genus() - 1 - s.e());
}

} // namespace ruled
