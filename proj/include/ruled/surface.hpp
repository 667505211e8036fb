#ifndef RULED_SURFACE_HPP
#define RULED_SURFACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "ruled/curve.hpp"
#include "ruled/divisor.hpp"
#include "ruled/elm_step.hpp"
#include "ruled/tri.hpp"

namespace ruled {

/// Divisor class m*X0 + b*f on a ruled surface.
struct PicClass {
    long m = 0;
    Divisor b;

    friend PicClass operator+(const PicClass& a, const PicClass& c) { return {a.m + c.m, a.b + c.b}; }
    friend PicClass operator-(const PicClass& a, const PicClass& c) { return {a.m - c.m, a.b - c.b}; }
    friend bool operator==(const PicClass& a, const PicClass& c) { return a.m == c.m && a.b == c.b; }
    std::string str() const {
        return std::to_string(m) + "*X0 + (" + b.str() + ")f";
    }
};

/// Numerical image of a PicClass: only (m, deg b) survive.
struct NumClass {
    long m = 0;
    long bdeg = 0;
    friend bool operator==(const NumClass& a, const NumClass& b) { return a.m == b.m && a.bdeg == b.bdeg; }
};

struct MinSectionInfo {
    PicClass cls;        // the minimal section as a surface class
    long self_int;       // always -e
    bool unique;         // false exactly for the product surface
    std::string label;
    // Decomposable extras: X1 self-intersection and the floor for the
    // self-intersection of any other section (e + 2).
    std::optional<long> x1_self_int;
    std::optional<long> other_section_min;
};

/**
 * Geometrically ruled surface P(E0) over a curve, either a decomposable
 * anchor P(O + O(e_class)) in normalized form (deg e_class <= 0) or the
 * result of an elementary-transformation chain.  Invariants (e,
 * decomposability, e_class, minimal section) are cached at construction;
 * chain surfaces keep a persistent pointer to their parent.
 */
class RuledSurface {
public:
    /// Decomposable surface with normalized invariant class (deg <= 0).
    RuledSurface(const Curve& curve, Divisor e_class);

    /// Normalize P(O(a) + O(b)): returns the surface together with the twist
    /// class t such that O(a)+O(b) = (O + O(e_class)) twisted by O(t).
    static std::pair<RuledSurface, Divisor> normalized(const Curve& curve, const Divisor& a,
                                                       const Divisor& b);

    /// Chain surface: result of applying `step` to `parent`.  The caller
    /// (the transform engine) supplies the already-derived invariants.
    static RuledSurface transformed(std::shared_ptr<const RuledSurface> parent, ElmStep step,
                                    Tri decomposable, long e, Divisor e_class, std::string min_label);

    const Curve& curve() const { return *curve_; }
    int genus() const { return curve_->genus(); }
    Tri decomposable() const { return decomposable_; }
    long e() const { return e_; }
    const Divisor& e_class() const { return e_class_; }
    bool is_product() const; // P1 x X: decomposable, e = 0, e_class ~ 0

    const std::shared_ptr<const RuledSurface>& parent() const { return parent_; }
    const std::optional<ElmStep>& step() const { return step_; }
    bool is_chain() const { return parent_ != nullptr; }
    int chain_length() const;

    // ---- intersection calculus -------------------------------------------
    NumClass num(const PicClass& c) const { return {c.m, curve_->degree(c.b)}; }
    long intersect(const NumClass& a, const NumClass& b) const {
        return -e_ * a.m * b.m + a.m * b.bdeg + b.m * a.bdeg;
    }
    long intersect(const PicClass& a, const PicClass& b) const { return intersect(num(a), num(b)); }

    /// Degree of the scroll image of a unisecant system: H^2 = 2 deg b - e.
    long scroll_degree(const PicClass& h) const;

    /// Section attached to a quotient line bundle O(a): X0 + (a - e_class)f.
    PicClass section_from_quotient(const Divisor& a) const { return {1, a - e_class_}; }

    PicClass x0() const { return {1, Divisor{}}; }
    PicClass x1() const { return {1, -e_class_}; } // decomposable: X1 ~ X0 - e_class f
    PicClass fiber(const std::string& P) const { return {0, Divisor::point(P)}; }

    MinSectionInfo min_section_info() const;

private:
    RuledSurface() = default;

    const Curve* curve_ = nullptr;
    Tri decomposable_ = Tri::Unknown;
    long e_ = 0;
    Divisor e_class_;
    std::string min_label_ = "X0";
    std::shared_ptr<const RuledSurface> parent_;
    std::optional<ElmStep> step_;

    void check_segre() const;
};

} // namespace ruled

#endif
