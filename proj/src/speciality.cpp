#include "ruled/speciality.hpp"

#include <algorithm>

#include "ruled/errors.hpp"
#include "ruled/linear_system.hpp"

namespace ruled {

Count speciality(const RuledSurface& s, const PicClass& h) {
    if (h.m != 1) throw PreconditionError("NotUnisecant", "speciality is defined for m=1 systems");
    long g = s.genus();
    long d = s.scroll_degree(h);
    Count h0 = h0_system(s, h);
    // h0 = d - 2g + 2 + i, so i = h0 - d + 2g - 2 (clamped: h1 >= 0).
    Count i = h0.shifted(-(d - 2 * g + 2));
    if (s.decomposable() == Tri::True) {
        Count direct = h_i_decomposable(s, 1, h.b, 1);
        if (i.exact() && direct.exact() && i.lo != direct.lo)
            throw InconsistentTable("speciality " + i.str() + " disagrees with the twist sum " +
                                    direct.str());
        // Intersect the two sound intervals.
        long lo = std::max(i.lo, direct.lo), hi = std::min(i.hi, direct.hi);
        if (lo > hi)
            throw InconsistentTable("speciality bounds " + i.str() + " and " + direct.str() +
                                    " are incompatible");
        return Count(lo, hi, i.exact() || direct.exact() ? "" : i.why);
    }
    return i;
}

Count cone_speciality(const Curve& c, const Divisor& b) {
    if (c.genus() < 1) throw PreconditionError("GenusTooSmall", "cone speciality needs g >= 1");
    Count direct = Count::of(c.genus()) + c.h1(b);
    // Cross-check through the cone model P(O + O(-b)) with |X0 + b f|.
    RuledSurface cone(c, -b);
    Count via_model = h_i_decomposable(cone, 1, b, 1);
    if (direct.exact() && via_model.exact() && direct.lo != via_model.lo)
        throw InconsistentTable("cone speciality " + direct.str() + " disagrees with the model value " +
                                via_model.str());
    return direct;
}

long projection_delta(long cycle_degree, long span_dim) {
    if (span_dim < 0 || cycle_degree < span_dim + 1)
        throw MalformedCycle("cycle of degree " + std::to_string(cycle_degree) +
                             " cannot span dimension " + std::to_string(span_dim));
    return cycle_degree - (span_dim + 1);
}

SpecialityLedger SpecialityLedger::with_projection(long cycle_degree, long span_dim) const {
    SpecialityLedger next = *this;
    next.events_.push_back({cycle_degree, span_dim, projection_delta(cycle_degree, span_dim)});
    return next;
}

Count SpecialityLedger::current() const {
    Count i = anchor_;
    for (const auto& ev : events_) i = i.shifted(ev.delta);
    return i;
}

Tri is_cone_test(const RuledSurface& s, const PicClass& h) {
    const Curve& c = s.curve();
    if (c.genus() < 1) throw PreconditionError("GenusTooSmall", "cone test needs g >= 1");
    Count h0 = h0_system(s, h);
    if (h0.at_least(4) != Tri::True) // N >= 3
        throw PreconditionError("SpanTooSmall", "cone test needs N >= 3, h0 is " + h0.str());
    if (is_bpf_system(s, h.m, h.b) != Tri::True)
        throw NotBasePointFree("cone test needs a certified base-point-free system");
    Tri all = Tri::True;
    auto dom = c.quantifier_domain(2);
    for (size_t i = 0; i < dom.size() && all != Tri::False; ++i)
        for (size_t j = i; j < dom.size() && all != Tri::False; ++j) {
            Count hm = h0_system(s, {h.m, h.b - Divisor::point(dom[i]) - Divisor::point(dom[j])});
            // Generators over dom[i], dom[j] meet iff the drop stays <= 3.
            long dmin = std::max(0L, h0.lo - hm.hi);
            long dmax = std::min(4L, h0.hi - hm.lo);
            if (dmin >= 4)
                all = Tri::False;
            else if (dmax >= 4)
                all = all && Tri::Unknown;
        }
    return all;
}

DirectrixBoundWitness directrix_speciality_bound_check(const RuledSurface& s, const PicClass& h,
                                                       const PicClass& c_section) {
    if (h.m != 1 || c_section.m != 1)
        throw PreconditionError("NotUnisecant", "bound check needs unisecant H and section C");
    const Curve& c = s.curve();
    DirectrixBoundWitness w;
    // O_C(H) has class b + c + e_class on the base curve (X1 restricts H to
    // b, X0 to b + e_class).
    w.restricted_class = c.canonical(h.b + c_section.b + s.e_class());
    w.restricted_degree = s.intersect(h, c_section);
    if (c.degree(w.restricted_class) != w.restricted_degree)
        throw InconsistentTable("restricted class degree " +
                                std::to_string(c.degree(w.restricted_class)) +
                                " does not match H.C = " + std::to_string(w.restricted_degree));
    w.curve_h1 = c.h1(w.restricted_class);
    w.scroll_i = speciality(s, h);
    if (w.curve_h1.hi <= w.scroll_i.lo)
        w.within_bound = Tri::True;
    else if (w.curve_h1.lo > w.scroll_i.hi)
        w.within_bound = Tri::False;
    else
        w.within_bound = Tri::Unknown;
    return w;
}

SpecialDirectrixReport special_directrix_search(const RuledSurface& s, const PicClass& h) {
    SpecialDirectrixReport r;
    long g = s.genus();
    long d = s.scroll_degree(h);
    Count ic = speciality(s, h);
    if (!ic.exact()) {
        r.reason = "speciality not exact: " + ic.str();
        return r;
    }
    long i = ic.value();
    if (i < 1) {
        r.reason = "scroll is nonspecial (i=0)";
        return r;
    }
    if (d < 4 * g - 2) {
        r.reason = "degree " + std::to_string(d) + " < 4g-2 = " + std::to_string(4 * g - 2);
        return r;
    }
    r.applicable = true;
    r.a = g - i + 1;
    long n = d - 2 * g + 1 + i; // = N
    r.feasible = 2 * r.a <= n;
    r.feasibility = std::to_string(2 * r.a) + " <= " + std::to_string(n) +
                    (r.feasible ? "" : " fails");
    r.degree_bound = 2 * g - 2;
    r.other_section_min = 2 * g;
    r.directrix_speciality = i;
    r.unique = r.feasible;
    r.minimal_degree = r.feasible;
    r.linearly_normal = r.feasible;
    return r;
}

} // namespace ruled
