#ifndef RULED_CURVE_HPP
#define RULED_CURVE_HPP

#include <map>
#include <string>
#include <vector>

#include "ruled/count.hpp"
#include "ruled/divisor.hpp"
#include "ruled/tri.hpp"

namespace ruled {

/**
 * Model of the base curve X: genus, named points, declared class symbols and
 * a partial h0 table, together with the dimension oracle for divisor classes.
 *
 * The oracle answers from (in order of strength)
 *   1. the tabulated value for the class (after alias rewriting),
 *   2. values forced by degree (deg < 0, deg > 2g-2, genus 0),
 *   3. the genericity rules for classes with a generic residual part,
 *   4. the widest interval consistent with Riemann-Roch and Clifford.
 *
 * All queries are pure; the model is immutable once built.
 */
class Curve {
public:
    explicit Curve(int genus);

    int genus() const { return g_; }
    long canonical_degree() const { return 2L * g_ - 2; }

    // ---- construction -----------------------------------------------------
    void add_point(const std::string& name);
    /// Declare an opaque class symbol of the given degree (e.g. a pencil
    /// class that has no expression in named points).
    void add_class_symbol(const std::string& name, long degree);
    /// Declare `sym` linearly equivalent to `expansion`; canonical() rewrites
    /// the symbol away.  The left-hand side must be a declared symbol.
    void set_alias(const std::string& sym, const Divisor& expansion);
    void tabulate_h0(const Divisor& d, long h0);
    void tabulate_effectivity(const Divisor& d, bool effective);

    const std::vector<std::string>& points() const { return points_; }
    bool has_point(const std::string& name) const;
    bool has_symbol(const std::string& name) const;

    /// Reserved symbolic generic point (i = 1, 2, ...).
    static std::string generic_point(int i) { return "@" + std::to_string(i); }
    /// Quantifier domain: named points plus `generics` symbolic generic
    /// points (0 when the named-only domain is selected).
    std::vector<std::string> quantifier_domain(int generics) const;
    void set_use_generic_quantifier(bool b) { quantify_generic_ = b; }
    bool use_generic_quantifier() const { return quantify_generic_; }

    // ---- queries ----------------------------------------------------------
    long degree(const Divisor& d) const;
    /// Apply declared alias rewrites until fixpoint.
    Divisor canonical(const Divisor& d) const;

    Count h0(const Divisor& d) const;
    Count h1(const Divisor& d) const;

    /// Spec semantics: True iff h0(D-P) = h0(D) > 0.
    Tri is_base_point(const Divisor& d, const std::string& P) const;
    /// Trace-blocking test h0(D-P) = h0(D), no positivity requirement.  This
    /// is the notion the surface-level trace criteria need (an empty summand
    /// blocks the trace at every point).
    Tri trace_blocked(const Divisor& d, const std::string& P) const;
    /// True iff h0 drops by exactly one at P.
    Tri drops_one(const Divisor& d, const std::string& P) const;

    Tri is_bpf(const Divisor& d) const;
    Tri is_very_ample(const Divisor& d) const;
    Tri nonspecial(const Divisor& d) const { return h1(d).equals(0); }
    Tri effective(const Divisor& d) const { return h0(d).at_least(1); }

    /// Invariant check over the tabulated closure; empty means consistent.
    std::vector<std::string> validate() const;

private:
    int g_;
    bool quantify_generic_ = true;
    std::vector<std::string> points_;
    std::map<std::string, long> symdeg_; // every named symbol -> degree
    std::map<std::string, Divisor> aliases_;
    std::map<Divisor, long> table_;
    std::map<Divisor, bool> eff_table_;

    Count h0_base(const Divisor& canon) const;
    Effectivity effectivity_of(const Divisor& canon) const;
};

} // namespace ruled

#endif
