#ifndef RULED_DIVISOR_HPP
#define RULED_DIVISOR_HPP

#include <map>
#include <string>

namespace ruled {

enum class Effectivity { Effective, NotEffective, Unknown };

/**
 * Formal divisor class on the base curve: an integer combination of named
 * symbols (points or declared classes) plus a generic residual degree.
 *
 * Equality is structural on (symbols, residual); linear equivalence is never
 * inferred beyond the aliases declared on the curve model.  The effectivity
 * flag rides along but does not take part in equality.
 *
 * Names starting with '@' are reserved for the symbolic generic points used
 * by the quantifier machinery.
 */
struct Divisor {
    std::map<std::string, long> syms;
    long residual = 0;
    Effectivity eff = Effectivity::Unknown;

    Divisor() : eff(Effectivity::Effective) {} // the zero class is effective

    static Divisor point(const std::string& name, long mult = 1) {
        Divisor d;
        d.syms[name] = mult;
        d.normalize();
        d.eff = mult >= 0 ? Effectivity::Effective : Effectivity::Unknown;
        return d;
    }
    static Divisor generic(long degree, Effectivity e = Effectivity::Unknown) {
        Divisor d;
        d.residual = degree;
        d.eff = (degree == 0 && e == Effectivity::Unknown) ? Effectivity::Effective : e;
        return d;
    }

    bool is_zero() const { return syms.empty() && residual == 0; }
    bool has_generic_part() const { return residual != 0; }

    void normalize() {
        for (auto it = syms.begin(); it != syms.end();)
            it = it->second == 0 ? syms.erase(it) : std::next(it);
    }

    friend Divisor operator+(const Divisor& a, const Divisor& b) {
        Divisor r = a;
        for (const auto& [s, c] : b.syms) r.syms[s] += c;
        r.residual += b.residual;
        r.normalize();
        r.eff = combine_eff(a, b);
        return r;
    }
    friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
    friend Divisor operator-(const Divisor& a) {
        Divisor r;
        for (const auto& [s, c] : a.syms) r.syms[s] = -c;
        r.residual = -a.residual;
        r.normalize();
        r.eff = a.is_zero() ? Effectivity::Effective : Effectivity::Unknown;
        return r;
    }
    friend Divisor operator*(long k, const Divisor& a) {
        Divisor r;
        for (const auto& [s, c] : a.syms) r.syms[s] = k * c;
        r.residual = k * a.residual;
        r.normalize();
        if (k == 0) return Divisor{};
        r.eff = (k > 0 && a.eff == Effectivity::Effective) ? Effectivity::Effective : Effectivity::Unknown;
        return r;
    }

    Divisor with_eff(Effectivity e) const {
        Divisor r = *this;
        r.eff = e;
        return r;
    }

    // Structural comparison (effectivity excluded), usable as a map key.
    friend bool operator==(const Divisor& a, const Divisor& b) {
        return a.residual == b.residual && a.syms == b.syms;
    }
    friend bool operator<(const Divisor& a, const Divisor& b) {
        if (a.residual != b.residual) return a.residual < b.residual;
        return a.syms < b.syms;
    }

    std::string str() const {
        std::string s;
        for (const auto& [name, c] : syms) {
            if (c == 0) continue;
            if (!s.empty() || c < 0) s += (c < 0 ? "-" : "+");
            long a = c < 0 ? -c : c;
            if (a != 1) s += std::to_string(a) + "*";
            s += name;
        }
        if (residual != 0) {
            if (!s.empty() && residual > 0) s += "+";
            if (residual < 0) s += "-";
            s += "<" + std::to_string(residual < 0 ? -residual : residual) + ">";
        }
        return s.empty() ? "0" : s;
    }

private:
    // Effective + Effective stays effective; everything else degrades to
    // Unknown (the engine must not guess).  The zero class acts neutrally.
    static Effectivity combine_eff(const Divisor& a, const Divisor& b) {
        if (a.is_zero()) return b.eff;
        if (b.is_zero()) return a.eff;
        if (a.eff == Effectivity::Effective && b.eff == Effectivity::Effective) return Effectivity::Effective;
        return Effectivity::Unknown;
    }
};

inline bool is_generic_point_name(const std::string& s) { return !s.empty() && s[0] == '@'; }

} // namespace ruled

#endif
