#ifndef RULED_SPECIALITY_HPP
#define RULED_SPECIALITY_HPP

#include <string>
#include <vector>

#include "ruled/count.hpp"
#include "ruled/surface.hpp"
#include "ruled/tri.hpp"

namespace ruled {

/// Speciality i(R) = h1 of the unisecant system cutting out the scroll;
/// computed as h0 - (d - 2g + 2) and cross-checked against the twist sum on
/// decomposable surfaces.
Count speciality(const RuledSurface& s, const PicClass& h);

/// Speciality of the cone over the curve embedded by |b|: g + h1(b).
/// Builds the cone model P(O + O(-b)) with system |X0 + b f| and checks the
/// two routes agree.
Count cone_speciality(const Curve& c, const Divisor& b);

/// Speciality increment of one projection: cycle degree minus (span + 1).
long projection_delta(long cycle_degree, long span_dim);

struct ProjectionEvent {
    long cycle_degree;
    long span_dim;
    long delta;
};

/// Immutable history of projections; appending returns a new ledger.
class SpecialityLedger {
public:
    explicit SpecialityLedger(Count anchor) : anchor_(std::move(anchor)) {}

    SpecialityLedger with_projection(long cycle_degree, long span_dim) const;

    const Count& anchor() const { return anchor_; }
    const std::vector<ProjectionEvent>& events() const { return events_; }
    Count current() const;

private:
    Count anchor_;
    std::vector<ProjectionEvent> events_;
};

/// Cone criterion: every pair of generators meets in the image, i.e.
/// h0(H - Pf - Qf) >= h0(H) - 3 for all P, Q.  Requires g >= 1, N >= 3 and
/// a certified base-point-free H.
Tri is_cone_test(const RuledSurface& s, const PicClass& h);

struct DirectrixBoundWitness {
    Divisor restricted_class; // class of H restricted to the section
    long restricted_degree;
    Count curve_h1;
    Count scroll_i;
    Tri within_bound;
};

/// Checks that the speciality of a directrix (a section C = X0 + c f) is at
/// most the speciality of the scroll.
DirectrixBoundWitness directrix_speciality_bound_check(const RuledSurface& s, const PicClass& h,
                                                       const PicClass& c_section);

struct SpecialDirectrixReport {
    bool applicable = false;
    std::string reason;         // failed gate when not applicable
    long a = 0;                 // g - i + 1
    bool feasible = false;
    std::string feasibility;    // the inequality 2a <= N with numbers
    long degree_bound = 0;      // deg(C) <= 2g - 2
    long other_section_min = 0; // any other section has degree >= 2g
    long directrix_speciality = 0; // h1 of H restricted to C equals i
    bool unique = false;
    bool minimal_degree = false;
    bool linearly_normal = false;
};

/// Existence and properties of the special directrix guaranteed for special
/// scrolls of degree >= 4g - 2.
SpecialDirectrixReport special_directrix_search(const RuledSurface& s, const PicClass& h);

} // namespace ruled

#endif
