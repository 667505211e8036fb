#include "ruled/surface.hpp"

#include "ruled/errors.hpp"

namespace ruled {

RuledSurface::RuledSurface(const Curve& curve, Divisor e_class) {
    curve_ = &curve;
    e_class_ = curve.canonical(e_class);
    long d = curve.degree(e_class_);
    if (d > 0)
        throw ScenarioError("decomposable surface needs deg(e_class) <= 0, got " + std::to_string(d) +
                            "; normalize first");
    e_ = -d;
    decomposable_ = Tri::True;
    min_label_ = "X0";
    check_segre();
}

std::pair<RuledSurface, Divisor> RuledSurface::normalized(const Curve& curve, const Divisor& a,
                                                          const Divisor& b) {
    // P(O(a)+O(b)) = P(O+O(b-a)) twisted by O(a); pick the twist so that the
    // leftover class has non-positive degree.
    if (curve.degree(b) <= curve.degree(a)) return {RuledSurface(curve, b - a), a};
    return {RuledSurface(curve, a - b), b};
}

RuledSurface RuledSurface::transformed(std::shared_ptr<const RuledSurface> parent, ElmStep step,
                                       Tri decomposable, long e, Divisor e_class,
                                       std::string min_label) {
    RuledSurface s;
    s.curve_ = &parent->curve();
    s.decomposable_ = decomposable;
    s.e_ = e;
    s.e_class_ = s.curve_->canonical(e_class);
    s.min_label_ = std::move(min_label);
    s.parent_ = std::move(parent);
    s.step_ = std::move(step);
    if (s.curve_->degree(s.e_class_) != -e)
        throw ScenarioError("invariant class of degree " + std::to_string(s.curve_->degree(s.e_class_)) +
                            " does not match e=" + std::to_string(e));
    s.check_segre();
    return s;
}

void RuledSurface::check_segre() const {
    long g = genus();
    if (decomposable_ == Tri::True && e_ < 0)
        throw SegreBoundViolation("decomposable surface with e=" + std::to_string(e_));
    if (decomposable_ == Tri::False && (e_ < -g || e_ > 2 * g - 2))
        throw SegreBoundViolation("indecomposable surface with e=" + std::to_string(e_) +
                                  " outside [" + std::to_string(-g) + "," + std::to_string(2 * g - 2) + "]");
}

bool RuledSurface::is_product() const {
    return decomposable_ == Tri::True && e_ == 0 && e_class_.is_zero();
}

int RuledSurface::chain_length() const {
    int n = 0;
    for (const RuledSurface* s = this; s->parent_; s = s->parent_.get()) ++n;
    return n;
}

long RuledSurface::scroll_degree(const PicClass& h) const {
    if (h.m != 1) throw PreconditionError("NotUnisecant", "scroll_degree needs m=1, got m=" + std::to_string(h.m));
    return intersect(h, h); // = 2 deg b - e
}

MinSectionInfo RuledSurface::min_section_info() const {
    MinSectionInfo info;
    info.cls = x0();
    info.self_int = -e_;
    info.unique = !is_product();
    info.label = min_label_;
    if (decomposable_ == Tri::True) {
        info.x1_self_int = e_;
        info.other_section_min = e_ + 2;
    }
    return info;
}

} // namespace ruled
