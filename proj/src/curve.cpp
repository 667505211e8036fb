#include "ruled/curve.hpp"

#include <algorithm>

#include "ruled/errors.hpp"

namespace ruled {

Curve::Curve(int genus) : g_(genus) {
    if (genus < 0) throw ScenarioError("genus must be nonnegative");
}

void Curve::add_point(const std::string& name) {
    if (is_generic_point_name(name)) throw ScenarioError("point name '" + name + "' is reserved");
    if (symdeg_.count(name)) throw ScenarioError("duplicate symbol '" + name + "'");
    points_.push_back(name);
    symdeg_[name] = 1;
}

void Curve::add_class_symbol(const std::string& name, long degree) {
    if (is_generic_point_name(name)) throw ScenarioError("class name '" + name + "' is reserved");
    if (symdeg_.count(name)) throw ScenarioError("duplicate symbol '" + name + "'");
    symdeg_[name] = degree;
}

void Curve::set_alias(const std::string& sym, const Divisor& expansion) {
    auto it = symdeg_.find(sym);
    if (it == symdeg_.end()) throw ScenarioError("alias for undeclared symbol '" + sym + "'");
    if (it->second != degree(expansion))
        throw ScenarioError("alias for '" + sym + "' changes the degree");
    aliases_[sym] = expansion;
    // Rewriting must terminate: expanding the alias chain from `sym` may not
    // reach `sym` again.
    Divisor probe = Divisor::point(sym);
    for (size_t i = 0; i <= aliases_.size(); ++i) {
        bool hit = false;
        Divisor next;
        next.residual = probe.residual;
        for (const auto& [s, c] : probe.syms) {
            auto a = aliases_.find(s);
            if (a != aliases_.end()) {
                next = next + c * a->second;
                hit = true;
            } else {
                next.syms[s] += c;
            }
        }
        if (!hit) return;
        if (next.syms.count(sym)) {
            aliases_.erase(sym);
            throw ScenarioError("alias cycle through '" + sym + "'");
        }
        next.normalize();
        probe = next;
    }
}

void Curve::tabulate_h0(const Divisor& d, long h0) {
    if (h0 < 0) throw ScenarioError("negative h0 tabulated for " + d.str());
    Divisor c = canonical(d);
    c.normalize();
    table_[c] = h0;
    if (h0 > 0) eff_table_[c] = true;
}

void Curve::tabulate_effectivity(const Divisor& d, bool effective) {
    Divisor c = canonical(d);
    c.normalize();
    eff_table_[c] = effective;
}

bool Curve::has_point(const std::string& name) const {
    return std::find(points_.begin(), points_.end(), name) != points_.end();
}

bool Curve::has_symbol(const std::string& name) const { return symdeg_.count(name) > 0; }

std::vector<std::string> Curve::quantifier_domain(int generics) const {
    std::vector<std::string> dom = points_;
    if (quantify_generic_)
        for (int i = 1; i <= generics; ++i) dom.push_back(generic_point(i));
    return dom;
}

long Curve::degree(const Divisor& d) const {
    long a = d.residual;
    for (const auto& [s, c] : d.syms) {
        if (is_generic_point_name(s)) {
            a += c;
            continue;
        }
        auto it = symdeg_.find(s);
        if (it == symdeg_.end()) throw ScenarioError("undeclared symbol '" + s + "'");
        a += c * it->second;
    }
    return a;
}

Divisor Curve::canonical(const Divisor& d) const {
    Divisor cur = d;
    for (size_t round = 0; round <= aliases_.size(); ++round) {
        bool hit = false;
        Divisor next;
        next.residual = cur.residual;
        for (const auto& [s, c] : cur.syms) {
            auto a = aliases_.find(s);
            if (a != aliases_.end()) {
                for (const auto& [s2, c2] : a->second.syms) next.syms[s2] += c * c2;
                next.residual += c * a->second.residual;
                hit = true;
            } else {
                next.syms[s] += c;
            }
        }
        next.normalize();
        if (!hit) break;
        cur = next;
    }
    cur.eff = d.eff; // rewriting preserves the class, hence effectivity
    return cur;
}

Effectivity Curve::effectivity_of(const Divisor& c) const {
    auto it = eff_table_.find(c);
    if (it != eff_table_.end()) return it->second ? Effectivity::Effective : Effectivity::NotEffective;
    if (c.eff != Effectivity::Unknown) return c.eff;
    // A nonnegative combination of points is effective on its face; a generic
    // residual only once its degree reaches g (below that a generic class has
    // no sections).
    bool plain = c.residual == 0 || c.residual >= g_;
    for (const auto& [s, co] : c.syms) {
        if (co < 0 || (!is_generic_point_name(s) && !has_point(s))) plain = false;
    }
    if (plain) return Effectivity::Effective;
    return Effectivity::Unknown;
}

Count Curve::h0(const Divisor& d) const {
    Divisor c = canonical(d);
    // Split off symbolic generic points: subtracting k of them from B imposes
    // k independent conditions (h0 drops to max(h0(B)-k, 0)); adding them is
    // the same as raising the generic residual.
    long removed = 0;
    Divisor base;
    base.residual = c.residual;
    base.eff = c.eff;
    for (const auto& [s, co] : c.syms) {
        if (is_generic_point_name(s)) {
            if (co > 0)
                base.residual += co;
            else
                removed += -co;
        } else {
            base.syms[s] = co;
        }
    }
    base.normalize();
    Count h = h0_base(base);
    if (removed > 0) h = h.shifted(-removed);
    return h;
}

Count Curve::h0_base(const Divisor& c) const {
    long a = degree(c);
    long g = g_;
    auto it = table_.find(c);
    Effectivity eff = effectivity_of(c);
    if (it != table_.end()) {
        long v = it->second;
        if (a < 0 && v > 0)
            throw InconsistentTable("h0(" + c.str() + ")=" + std::to_string(v) + " with degree " + std::to_string(a));
        if (a > 2 * g - 2 && v != a - g + 1)
            throw InconsistentTable("h0(" + c.str() + ")=" + std::to_string(v) + " contradicts Riemann-Roch");
        if (eff == Effectivity::NotEffective && v > 0)
            throw InconsistentTable(c.str() + " tabulated not effective but h0=" + std::to_string(v));
        return Count::of(v);
    }
    if (eff == Effectivity::NotEffective) {
        if (a > 2 * g - 2 && a - g + 1 > 0)
            throw InconsistentTable(c.str() + " declared not effective but h0 is forced to " +
                                    std::to_string(a - g + 1));
        return Count::of(0);
    }
    if (a < 0) return Count::of(0);
    if (a > 2 * g - 2) return Count::of(a - g + 1); // nonspecial range (covers all of g = 0)
    if (eff == Effectivity::Effective && a == 0) return Count::of(1); // the zero class
    if (c.has_generic_part()) {
        // Generic residual part: for an effective class the fixed part is
        // generic, so h0 = a-g+1 once a >= g and 1 below; for an undeclared
        // one the class itself is a generic bundle, so h0 = max(0, a-g+1).
        if (eff == Effectivity::Effective) return Count::of(a >= g ? a - g + 1 : 1);
        return Count::of(std::max(0L, a - g + 1));
    }
    if (a == 0) return Count::range(0, 1, "degree-0 class " + c.str() + " of undeclared effectivity");
    // Special-range named class with no tabulated value: the best sound
    // bounds are Riemann-Roch below and Clifford above.
    long lo = std::max(0L, a - g + 1);
    if (eff == Effectivity::Effective) lo = std::max(lo, 1L);
    long hi = a / 2 + 1;
    return Count::range(lo, hi, "h0(" + c.str() + ") not tabulated");
}

Count Curve::h1(const Divisor& d) const {
    long a = degree(d);
    if (a > 2 * g_ - 2) return Count::of(0);
    Count h = h0(d);
    return h.shifted(g_ - 1 - a);
}

namespace {
// Feasible drops h0(D) - h0(D-P) lie in {0,1}; intersect that with what the
// intervals allow.
Tri drop_is(const Count& h, const Count& hm, long target) {
    long dmin = std::max(0L, h.lo - hm.hi);
    long dmax = std::min(1L, h.hi - hm.lo);
    if (target < dmin || target > dmax) return Tri::False;
    if (dmin == dmax) return Tri::True;
    return Tri::Unknown;
}
} // namespace

Tri Curve::trace_blocked(const Divisor& d, const std::string& P) const {
    return drop_is(h0(d), h0(d - Divisor::point(P)), 0);
}

Tri Curve::drops_one(const Divisor& d, const std::string& P) const {
    return drop_is(h0(d), h0(d - Divisor::point(P)), 1);
}

Tri Curve::is_base_point(const Divisor& d, const std::string& P) const {
    Count h = h0(d);
    if (h.equals(0) == Tri::True) return Tri::False;
    Tri blocked = trace_blocked(d, P);
    if (h.at_least(1) == Tri::True) return blocked;
    // h0 might be 0 (then no base point) or positive (then `blocked` decides).
    if (blocked == Tri::False) return Tri::False;
    return Tri::Unknown;
}

Tri Curve::is_bpf(const Divisor& d) const {
    long a = degree(d);
    long g = g_;
    Count h = h0(d);
    if (h.equals(0) == Tri::True) return Tri::False;
    if (a >= 2 * g) return Tri::True; // classical: degree 2g kills all base points
    Effectivity eff = effectivity_of(canonical(d));
    if (h.equals(1) == Tri::True && a >= 1 && eff == Effectivity::Effective)
        return Tri::False; // pencil-free effective class: the fixed divisor is all of D
    if (canonical(d).has_generic_part() || [&] {
            for (const auto& [s, c] : canonical(d).syms)
                if (is_generic_point_name(s)) return true;
            return false;
        }()) {
        // Generic class in the special range: base point free iff a >= g+1.
        if (a >= g + 1 && h.at_least(1) == Tri::True) return Tri::True;
        if (a <= g && a >= 1) {
            if (eff == Effectivity::Effective) return Tri::False;
            if (h.at_least(1) == Tri::True) return Tri::False;
            return Tri::Unknown; // h0 may be 0
        }
        if (a == 0) return h.at_least(1) == Tri::True ? Tri::True : Tri::Unknown;
    }
    Tri all = Tri::True;
    for (const auto& P : quantifier_domain(1)) all = all && drops_one(d, P);
    return all;
}

Tri Curve::is_very_ample(const Divisor& d) const {
    long a = degree(d);
    long g = g_;
    if (g == 0) return a >= 1 ? Tri::True : Tri::False;
    if (a >= 2 * g + 1) return Tri::True;
    Count h = h0(d);
    if (h.equals(0) == Tri::True) return Tri::False;
    // An embedded curve of positive genus needs a plane, so h0 >= 3.
    if (h.hi <= 2) return Tri::False;
    Divisor c = canonical(d);
    bool generic = c.has_generic_part();
    for (const auto& [s, co] : c.syms)
        if (is_generic_point_name(s)) generic = true;
    if (generic) {
        // Generic class: very ample iff a >= g+3 (a >= 2g+1 handled above).
        if (a >= g + 3 && h.at_least(1) == Tri::True) return Tri::True;
        if (a <= g + 2) return Tri::False;
    }
    Tri all = Tri::True;
    auto dom = quantifier_domain(2);
    for (size_t i = 0; i < dom.size() && all != Tri::False; ++i) {
        for (size_t j = i; j < dom.size() && all != Tri::False; ++j) {
            Divisor dd = d - Divisor::point(dom[i]) - Divisor::point(dom[j]);
            Count hm = h0(dd);
            // Separating points and tangent vectors: drop exactly 2.
            long dmin = std::max(0L, h.lo - hm.hi);
            long dmax = std::min(2L, h.hi - hm.lo);
            if (2 < dmin || 2 > dmax)
                all = Tri::False;
            else if (dmin != 2 || dmax != 2)
                all = all && Tri::Unknown;
        }
    }
    return all;
}

std::vector<std::string> Curve::validate() const {
    std::vector<std::string> bad;
    long g = g_;
    for (const auto& [c, v] : table_) {
        long a = degree(c);
        std::string who = "h0(" + c.str() + ")=" + std::to_string(v);
        if (a < 0 && v > 0) bad.push_back(who + " but degree is negative");
        if (a > 2 * g - 2 && v != a - g + 1) bad.push_back(who + " violates Riemann-Roch");
        if (v < a - g + 1) bad.push_back(who + " below the Riemann-Roch minimum");
        if (v >= 2 && a <= 2 * g - 2 && v > a / 2 + 1)
            bad.push_back(who + " violates the Clifford bound");
        auto e = eff_table_.find(c);
        if (e != eff_table_.end() && !e->second && v > 0)
            bad.push_back(who + " but the class is tabulated not effective");
        for (const auto& P : points_) {
            auto it2 = table_.find(c - Divisor::point(P));
            if (it2 == table_.end()) continue;
            long drop = v - it2->second;
            if (drop < 0 || drop > 1)
                bad.push_back(who + " vs h0(" + (c - Divisor::point(P)).str() + ")=" +
                              std::to_string(it2->second) + ": drop " + std::to_string(drop) +
                              " at " + P);
        }
    }
    return bad;
}

} // namespace ruled
