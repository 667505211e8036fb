#include "ruled/linear_system.hpp"

#include <algorithm>
#include <optional>

#include "ruled/errors.hpp"

namespace ruled {

namespace {

// Feasible values of h - hm given both intervals and the a-priori range
// [0, maxdrop]; empty optional when not pinned down.
struct DropRange {
    long lo, hi;
};
DropRange drop_range(const Count& h, const Count& hm, long maxdrop) {
    return {std::max(0L, h.lo - hm.hi), std::min(maxdrop, h.hi - hm.lo)};
}
std::optional<long> exact_drop(const Count& h, const Count& hm, long maxdrop) {
    DropRange r = drop_range(h, hm, maxdrop);
    if (r.lo == r.hi) return r.lo;
    return std::nullopt;
}
Tri drop_equals(const Count& h, const Count& hm, long maxdrop, long target) {
    DropRange r = drop_range(h, hm, maxdrop);
    if (target < r.lo || target > r.hi) return Tri::False;
    if (r.lo == r.hi) return Tri::True;
    return Tri::Unknown;
}

bool step_lowers_e(const RuledSurface& parent, Position pos) {
    switch (pos) {
        case Position::OnX1:
        case Position::OffBothGenericFiber:
            return parent.e() >= 1;
        case Position::OffBothBasePointFiber:
            return true;
        default:
            return false;
    }
}
bool step_is_zero_flip(const RuledSurface& parent, Position pos) {
    return parent.e() == 0 && (pos == Position::OnX1 || pos == Position::OffBothGenericFiber);
}

/// Is the transform center a base point of the unisecant system |X0 + D f|
/// on the parent surface?  (Trace-blocking semantics: an empty summand
/// blocks at every point of the corresponding section.)
Tri center_blocked(const RuledSurface& parent, const Divisor& d, const ElmStep& step) {
    const Curve& c = parent.curve();
    if (parent.decomposable() == Tri::True) {
        const Divisor& ec = parent.e_class();
        switch (step.position) {
            case Position::OnX0:
            case Position::OnMinSection:
                return c.trace_blocked(d + ec, step.P);
            case Position::OnX1:
                return c.trace_blocked(d, step.P);
            case Position::OffBothGenericFiber:
            case Position::OffBothBasePointFiber:
                return c.trace_blocked(d, step.P) && c.trace_blocked(d + ec, step.P);
            default:
                return Tri::Unknown;
        }
    }
    // Indecomposable (or uncertified) parent: only OnMinSection is possible.
    Count h = h0_chain(parent, {1, d});
    Count hm = h0_chain(parent, {1, d - Divisor::point(step.P)});
    std::optional<long> drop = exact_drop(h, hm, 2);
    if (!drop) return Tri::Unknown;
    if (*drop == 2) return Tri::False; // no base point at all on the generator
    if (*drop == 0) return Tri::True;  // whole generator fixed
    // one base point on the generator; nonspecial d puts it on the minimal
    // section, which is where the center sits
    if (c.nonspecial(d) == Tri::True) return Tri::True;
    return Tri::Unknown;
}

} // namespace

Count h_i_decomposable(const RuledSurface& s, long m, const Divisor& b, int i) {
    if (s.decomposable() != Tri::True)
        throw PreconditionError("NotDecomposable", "twist-sum formula needs a decomposable surface");
    if (m < 0) return Count::of(0);
    const Curve& c = s.curve();
    Count total = Count::of(0);
    for (long k = 0; k <= m; ++k) {
        Divisor t = b + k * s.e_class();
        total += i == 0 ? c.h0(t) : c.h1(t);
    }
    return total;
}

Count h_i_upper_bound(const RuledSurface& s, long m, const Divisor& b, int i) {
    if (i <= 0) throw PreconditionError("BadIndex", "upper bound is for i > 0");
    if (m < 0) return Count::of(0);
    const Curve& c = s.curve();
    long hi = 0;
    for (long k = 0; k <= m; ++k) hi += c.h1(b + k * s.e_class()).hi;
    if (hi == 0) return Count::of(0);
    return Count::range(0, hi, "twist-sum upper bound only");
}

Count h0_chain(const RuledSurface& s, const PicClass& h) {
    if (h.m != 1) throw PreconditionError("NotUnisecant", "chain recursion needs m=1");
    if (s.decomposable() == Tri::True || !s.is_chain()) return h_i_decomposable(s, 1, h.b, 0);
    const RuledSurface& parent = *s.parent();
    const ElmStep& step = *s.step();
    const Divisor p = Divisor::point(step.P);
    Divisor d;
    if (step_is_zero_flip(parent, step.position))
        d = h.b - parent.e_class();
    else if (step_lowers_e(parent, step.position))
        d = h.b + p;
    else
        d = h.b;
    Count hp = h0_chain(parent, {1, d});
    switch (center_blocked(parent, d, step)) {
        case Tri::False: return hp.shifted(-1);
        case Tri::True: return hp;
        default:
            return Count(std::max(0L, hp.lo - 1), hp.hi,
                         "base-point status of the transform center at '" + step.P + "' undecided");
    }
}

Count h0_system(const RuledSurface& s, const PicClass& h) {
    if (h.m < 0) return Count::of(0);
    if (s.decomposable() == Tri::True) return h_i_decomposable(s, h.m, h.b, 0);
    const Curve& c = s.curve();
    if (h.m == 0) return c.h0(h.b);
    if (h.m == 1) {
        // On any ruled surface, nonspecial b gives the two-summand value.
        Count hb = c.h0(h.b), hbe = c.h0(h.b + s.e_class());
        if (c.nonspecial(h.b) == Tri::True && hb.exact() && hbe.exact()) return hb + hbe;
        if (s.is_chain()) return h0_chain(s, h);
    }
    long hi = 0;
    for (long k = 0; k <= h.m; ++k) hi += c.h0(h.b + k * s.e_class()).hi;
    return Count::range(0, hi, "no exact dimension rule for this surface/system");
}

Count h1_system(const RuledSurface& s, const PicClass& h) {
    if (h.m < 0) return Count::of(0);
    if (s.decomposable() == Tri::True) return h_i_decomposable(s, h.m, h.b, 1);
    if (h.m == 0) return s.curve().h1(h.b);
    return h_i_upper_bound(s, h.m, h.b, 1);
}

const char* to_string(BaseLocusKind k) {
    switch (k) {
        case BaseLocusKind::FreeOnGenerator: return "FreeOnGenerator";
        case BaseLocusKind::PointOnX0: return "PointOnX0";
        case BaseLocusKind::PointOnX1: return "PointOnX1";
        case BaseLocusKind::SinglePointUnlocated: return "SinglePointUnlocated";
        case BaseLocusKind::FixedGenerator: return "FixedGenerator";
        default: return "Unknown";
    }
}

std::vector<BaseLocusEntry> base_locus(const RuledSurface& s, long m, const Divisor& b) {
    const Curve& c = s.curve();
    std::vector<BaseLocusEntry> out;
    auto domain = c.quantifier_domain(1);
    if (s.decomposable() == Tri::True) {
        const Divisor& ec = s.e_class();
        for (const auto& P : domain) {
            if (m == 0) {
                Tri t = c.is_base_point(b, P);
                out.push_back({P,
                               t == Tri::True    ? BaseLocusKind::FixedGenerator
                               : t == Tri::False ? BaseLocusKind::FreeOnGenerator
                                                 : BaseLocusKind::Unknown,
                               "base point of the twist class: " + std::string(to_string(t))});
                continue;
            }
            Tri fix = Tri::True;
            for (long k = 0; k <= m; ++k) fix = fix && c.is_base_point(b + k * ec, P);
            Tri on_x0 = c.is_base_point(b + m * ec, P);
            Tri on_x1 = c.is_base_point(b, P);
            if (fix == Tri::True) {
                out.push_back({P, BaseLocusKind::FixedGenerator, "common base point of every twist"});
                continue;
            }
            bool any = false;
            if (on_x0 == Tri::True) {
                out.push_back({P, BaseLocusKind::PointOnX0, "base point of the top twist"});
                any = true;
            }
            if (on_x1 == Tri::True) {
                out.push_back({P, BaseLocusKind::PointOnX1, "base point of the bottom twist"});
                any = true;
            }
            if (any) continue;
            if (on_x0 == Tri::False && on_x1 == Tri::False && fix == Tri::False)
                out.push_back({P, BaseLocusKind::FreeOnGenerator, "no twist has a base point here"});
            else
                out.push_back({P, BaseLocusKind::Unknown, "twist base-point status undecided"});
        }
        return out;
    }
    if (m == 1) {
        Count h = h0_system(s, {1, b});
        for (const auto& P : domain) {
            Count hm = h0_system(s, {1, b - Divisor::point(P)});
            std::optional<long> drop = exact_drop(h, hm, 2);
            std::string w = "h0 drop " + h.str() + " -> " + hm.str();
            if (!drop) {
                out.push_back({P, BaseLocusKind::Unknown, w});
            } else if (*drop == 2) {
                out.push_back({P, BaseLocusKind::FreeOnGenerator, w});
            } else if (*drop == 0) {
                out.push_back({P, BaseLocusKind::FixedGenerator, w});
            } else if (c.nonspecial(b) == Tri::True) {
                out.push_back({P, BaseLocusKind::PointOnX0, w + "; twist class nonspecial"});
            } else {
                out.push_back({P, BaseLocusKind::SinglePointUnlocated, w});
            }
        }
        return out;
    }
    out.push_back({"", BaseLocusKind::Unknown, "no base-locus rule for this surface/system"});
    return out;
}

Tri is_bpf_system(const RuledSurface& s, long m, const Divisor& b) {
    const Curve& c = s.curve();
    Count h = h0_system(s, {m, b});
    Tri pos = h.at_least(1);
    if (pos == Tri::False) return Tri::False;
    if (s.decomposable() == Tri::True) {
        Tri crit = m == 0 ? c.is_bpf(b) : c.is_bpf(b) && c.is_bpf(b + m * s.e_class());
        return pos && crit;
    }
    if (m == 1) {
        Tri all = Tri::True;
        for (const auto& P : c.quantifier_domain(1))
            all = all && drop_equals(h, h0_system(s, {1, b - Divisor::point(P)}), 2, 2);
        return pos && all;
    }
    return Tri::Unknown;
}

Tri generic_member_irreducible(const RuledSurface& s, const Divisor& b) {
    const Curve& c = s.curve();
    Divisor cb = c.canonical(b);
    if (s.decomposable() == Tri::True) {
        if (cb.is_zero()) return Tri::True;                  // X0 itself
        if (cb == c.canonical(-s.e_class())) return Tri::True; // X1 itself
        Tri eff0 = c.effective(b);
        Tri eff1 = c.effective(b + s.e_class());
        Tri no_common = Tri::True;
        for (const auto& P : c.quantifier_domain(1))
            no_common =
                no_common && !(c.is_base_point(b, P) && c.is_base_point(b + s.e_class(), P));
        return eff0 && eff1 && no_common;
    }
    // General surface: section exists iff either the system is a single
    // curve missing every generator pencil, or base points have codimension
    // exactly two along every generator.
    Count h = h0_system(s, {1, b});
    if (h.equals(1) == Tri::True) {
        Tri all0 = Tri::True;
        for (const auto& P : c.quantifier_domain(1))
            all0 = all0 && h0_system(s, {1, b - Divisor::point(P)}).equals(0);
        if (all0 == Tri::True) return Tri::True;
        if (all0 == Tri::False) return Tri::False;
        return Tri::Unknown;
    }
    if (h.at_least(2) == Tri::True) {
        Tri all = Tri::True;
        for (const auto& P : c.quantifier_domain(1)) {
            Count hm = h0_system(s, {1, b - Divisor::point(P)});
            Tri dropped = drop_equals(h, hm, 2, 1) || drop_equals(h, hm, 2, 2);
            all = all && dropped;
        }
        if (!c.use_generic_quantifier()) return all == Tri::False ? Tri::False : Tri::Unknown;
        Count hg = h0_system(s, {1, b - Divisor::point(Curve::generic_point(1))});
        Tri generic2 = drop_equals(h, hg, 2, 2);
        return all && generic2;
    }
    return Tri::Unknown;
}

Tri is_very_ample_surface(const RuledSurface& s, long m, const Divisor& b, std::string* criterion) {
    auto set = [&](const char* w) {
        if (criterion) *criterion = w;
    };
    if (m < 1) throw PreconditionError("NotSecant", "very-ampleness needs m >= 1");
    const Curve& c = s.curve();
    Tri bpf = is_bpf_system(s, m, b);
    if (bpf == Tri::False) {
        set("not base-point-free");
        return Tri::False;
    }
    if (s.decomposable() == Tri::True) {
        const Divisor& ec = s.e_class();
        if (m == 1) {
            set("summand very-ampleness (iff)");
            return c.is_very_ample(b) && c.is_very_ample(b + ec);
        }
        set("m-secant summand criterion (iff)");
        Tri free = c.is_bpf(b) && c.is_bpf(b + ec) && c.is_bpf(b + (m - 1) * ec) &&
                   c.is_bpf(b + m * ec);
        return free && c.is_very_ample(b) && c.is_very_ample(b + m * ec);
    }
    if (m == 1) {
        Tri suff = c.is_very_ample(b) && c.is_very_ample(b + s.e_class()) && c.nonspecial(b);
        if (suff == Tri::True) {
            set("nonspecial summand criterion (sufficient)");
            return Tri::True;
        }
        set("quantified drop test (iff)");
        Count h = h0_system(s, {1, b});
        Tri all = Tri::True;
        auto dom = c.quantifier_domain(2);
        for (size_t i = 0; i < dom.size() && all != Tri::False; ++i)
            for (size_t j = i; j < dom.size() && all != Tri::False; ++j) {
                Count hm = h0_system(
                    s, {1, b - Divisor::point(dom[i]) - Divisor::point(dom[j])});
                all = all && drop_equals(h, hm, 4, 4);
            }
        return all;
    }
    set("no applicable criterion");
    return Tri::Unknown;
}

IsoLocus isomorphism_locus(const RuledSurface& s, const PicClass& h) {
    const Curve& c = s.curve();
    Tri bpf = is_bpf_system(s, h.m, h.b);
    if (bpf != Tri::True)
        throw NotBasePointFree("isomorphism locus needs a certified base-point-free system");
    IsoLocus k;
    if (h.m >= 2) {
        if (s.decomposable() != Tri::True) {
            k.note = "no rule for multisecant systems on this surface";
            return k;
        }
        // Per-generator test: the image is an isomorphism near Pf iff P is a
        // base point of none of the four decisive twists.
        const Divisor& ec = s.e_class();
        Tri all_free = Tri::True;
        for (const auto& P : c.quantifier_domain(1)) {
            Tri bad = c.is_base_point(h.b, P) || c.is_base_point(h.b + ec, P) ||
                      c.is_base_point(h.b + (h.m - 1) * ec, P) ||
                      c.is_base_point(h.b + h.m * ec, P);
            if (bad == Tri::True)
                k.components.push_back({"generator", "Pf over " + P, P, "a decisive twist has a base point"});
            all_free = all_free && !bad;
        }
        k.empty = all_free;
        return k;
    }
    std::string crit;
    if (is_very_ample_surface(s, h.m, h.b, &crit) == Tri::True) {
        k.empty = Tri::True;
        k.note = "very ample (" + crit + ")";
        return k;
    }
    if (s.decomposable() != Tri::True) {
        k.empty = Tri::Unknown;
        k.note = "very-ampleness undecided; no component rule for this surface";
        return k;
    }
    const Divisor& ec = s.e_class();
    const Divisor be = h.b + ec;
    if (c.canonical(be).is_zero()) {
        k.empty = Tri::False;
        k.components.push_back({"curve", "X0", "", "top twist trivial: X0 is contracted"});
        k.note = "cone: X0 goes to the vertex";
        return k;
    }
    Tri va_b = c.is_very_ample(h.b), va_be = c.is_very_ample(be);
    Tri bpf_b = c.is_bpf(h.b), bpf_be = c.is_bpf(be);
    bool confined = false;
    if (va_b == Tri::True && bpf_be == Tri::True) {
        k.note = "isomorphism on S minus X0";
        confined = true;
        if (va_be == Tri::False)
            k.components.push_back(
                {"curve", "X0", "", "top twist not very ample: X0 is not embedded"});
    } else if (va_be == Tri::True && bpf_b == Tri::True) {
        k.note = "isomorphism on S minus X1";
        confined = true;
        if (va_b == Tri::False)
            k.components.push_back(
                {"curve", "X1", "", "bottom twist not very ample: X1 is not embedded"});
    }
    if (confined) {
        k.empty = k.components.empty() ? Tri::Unknown : Tri::False;
        return k;
    }
    // Located points: x in K iff x is a base point of |H - Pf| for some P.
    bool any = false, unknown = false;
    for (const auto& P : c.quantifier_domain(1)) {
        for (const auto& Q : c.quantifier_domain(1)) {
            Tri t0 = c.is_base_point(be - Divisor::point(P), Q);
            Tri t1 = c.is_base_point(h.b - Divisor::point(P), Q);
            if (t0 == Tri::True) {
                k.components.push_back(
                    {"generator_point", "X0 ^ " + Q + "f", Q,
                     "base point of the top twist of |H - " + P + "f|"});
                any = true;
            }
            if (t1 == Tri::True) {
                k.components.push_back(
                    {"generator_point", "X1 ^ " + Q + "f", Q,
                     "base point of the bottom twist of |H - " + P + "f|"});
                any = true;
            }
            if (t0 == Tri::Unknown || t1 == Tri::Unknown) unknown = true;
        }
    }
    k.empty = any ? Tri::False : (unknown ? Tri::Unknown : Tri::True);
    return k;
}

const char* to_string(SingularityKind k) {
    switch (k) {
        case SingularityKind::GeneratorsMeet: return "GeneratorsMeet";
        case SingularityKind::TorsalGenerator: return "TorsalGenerator";
        case SingularityKind::DoubleGenerator: return "DoubleGenerator";
        case SingularityKind::InfinitelyNearDouble: return "InfinitelyNearDouble";
        case SingularityKind::MultipleDirectrixImage: return "MultipleDirectrixImage";
        default: return "IsolatedOnDirectrix";
    }
}

SingularityReport singularity_report(const RuledSurface& s, const PicClass& h) {
    if (h.m != 1) throw PreconditionError("NotUnisecant", "singularity taxonomy needs m=1");
    if (s.decomposable() != Tri::True)
        throw PreconditionError("NotDecomposable", "singularity taxonomy needs a decomposable surface");
    const Curve& c = s.curve();
    if (is_bpf_system(s, 1, h.b) != Tri::True)
        throw NotBasePointFree("singularity taxonomy needs a certified base-point-free system");
    SingularityReport rep;
    const Divisor c0 = h.b + s.e_class(); // governs the image of X0
    const Divisor c1 = h.b;               // governs the image of X1
    const auto& pts = c.points();

    auto twist_drop = [&](const Divisor& t, const Divisor& sub) -> std::optional<long> {
        return exact_drop(c.h0(t), c.h0(t - sub), 2);
    };

    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i; j < pts.size(); ++j) {
            const std::string &P = pts[i], &Q = pts[j];
            Divisor sub = Divisor::point(P) + Divisor::point(Q); // = 2P when i == j
            auto d0 = twist_drop(c0, sub), d1 = twist_drop(c1, sub);
            if (!d0 || !d1) continue; // nothing certifiable for this pair
            long total = *d0 + *d1;
            if (total >= 4) continue; // full rank: no singularity witnessed here
            std::string w = "top twist drop " + std::to_string(*d0) + ", bottom twist drop " +
                            std::to_string(*d1);
            bool doubled = i == j;
            if (total == 3) {
                rep.entries.push_back({doubled ? SingularityKind::TorsalGenerator
                                               : SingularityKind::GeneratorsMeet,
                                       "", P, Q, 0, w});
                if (!doubled && *d0 == 1)
                    rep.entries.push_back({SingularityKind::IsolatedOnDirectrix, "X0", P, Q, 0, w});
                if (!doubled && *d1 == 1)
                    rep.entries.push_back({SingularityKind::IsolatedOnDirectrix, "X1", P, Q, 0, w});
            } else {
                rep.entries.push_back({doubled ? SingularityKind::InfinitelyNearDouble
                                               : SingularityKind::DoubleGenerator,
                                       "", P, Q, 0, w});
            }
        }
    }

    // A base-point-free twist whose sections fail to separate some named
    // pair maps the corresponding directrix with multiplicity >= 2.
    auto directrix_multiple = [&](const Divisor& t, const char* section) {
        if (c.is_bpf(t) != Tri::True) return;
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                Divisor sub = Divisor::point(pts[i]) + Divisor::point(pts[j]);
                auto d = exact_drop(c.h0(t), c.h0(t - sub), 2);
                if (d && *d == 1) {
                    rep.entries.push_back({SingularityKind::MultipleDirectrixImage, section,
                                           pts[i], pts[j], 2,
                                           "twist sections identify " + pts[i] + " and " + pts[j]});
                    return;
                }
            }
    };
    directrix_multiple(c0, "X0");
    directrix_multiple(c1, "X1");

    std::string vacrit;
    if (is_very_ample_surface(s, 1, h.b, &vacrit) == Tri::True) {
        rep.birational = Tri::True;
        return rep;
    }
    // Birational if the map separates a generic pair of generators.
    if (c.use_generic_quantifier()) {
        Divisor sub = Divisor::point(Curve::generic_point(1)) + Divisor::point(Curve::generic_point(2));
        Count hh = h0_system(s, h);
        Count hm = h0_system(s, {1, h.b - sub});
        if (drop_equals(hh, hm, 4, 4) == Tri::True) rep.birational = Tri::True;
    }
    return rep;
}

LinearSystemReport classify(const RuledSurface& s, const PicClass& h) {
    LinearSystemReport r;
    r.h0 = h0_system(s, h);
    r.h1 = h1_system(s, h);
    if (h.m == 1) r.degree = s.scroll_degree(h);
    r.base_locus = base_locus(s, h.m, h.b);
    r.bpf = is_bpf_system(s, h.m, h.b);
    if (h.m == 1) r.generic_member_irreducible = generic_member_irreducible(s, h.b);
    if (h.m >= 1) r.very_ample = is_very_ample_surface(s, h.m, h.b, &r.va_criterion);
    return r;
}

} // namespace ruled
