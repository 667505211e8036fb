#ifndef RULED_COUNT_HPP
#define RULED_COUNT_HPP

#include <algorithm>
#include <string>

#include "ruled/errors.hpp"
#include "ruled/tri.hpp"

namespace ruled {

/**
 * A nonnegative integer known either exactly or as a closed interval [lo, hi].
 *
 * Cohomology dimensions that the genericity rules cannot pin down are carried
 * as intervals; arithmetic is endpoint-wise and comparison predicates return
 * Unknown whenever the interval straddles the threshold.  `why` names the
 * undecided criterion when the value is inexact (it is dropped once the value
 * collapses to an exact one).
 */
struct Count {
    long lo = 0;
    long hi = 0;
    std::string why; // empty when exact

    Count() = default;
    Count(long l, long h, std::string reason = {}) : lo(l), hi(h), why(std::move(reason)) {
        if (lo > hi || lo < 0)
            throw PreconditionError("BadInterval",
                                    "invalid count interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
        if (exact()) why.clear();
    }

    static Count of(long v) { return Count(v, v); }
    static Count range(long l, long h, std::string reason) { return Count(l, h, std::move(reason)); }

    bool exact() const { return lo == hi; }
    long value() const {
        if (!exact()) throw PreconditionError("InexactCount", "value() on interval: " + why);
        return lo;
    }

    /// Endpoint-wise shift, clamped at zero (valid for quantities known to be
    /// nonnegative, e.g. h1 derived from h0 via Riemann-Roch).
    Count shifted(long delta) const {
        return Count(std::max(0L, lo + delta), std::max(0L, hi + delta), why);
    }

    friend Count operator+(const Count& a, const Count& b) {
        std::string w = !a.why.empty() ? a.why : b.why;
        return Count(a.lo + b.lo, a.hi + b.hi, std::move(w));
    }
    Count& operator+=(const Count& b) { return *this = *this + b; }

    friend bool operator==(const Count& a, const Count& b) { return a.lo == b.lo && a.hi == b.hi; }

    /// Does this count equal the exact value v?
    Tri equals(long v) const {
        if (exact()) return tri_of(lo == v);
        if (v < lo || v > hi) return Tri::False;
        return Tri::Unknown;
    }
    Tri at_least(long v) const {
        if (lo >= v) return Tri::True;
        if (hi < v) return Tri::False;
        return Tri::Unknown;
    }

    std::string str() const {
        if (exact()) return std::to_string(lo);
        return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
};

/// Tri-state equality of two counts.
inline Tri counts_equal(const Count& a, const Count& b) {
    if (a.exact() && b.exact()) return tri_of(a.lo == b.lo);
    if (a.hi < b.lo || b.hi < a.lo) return Tri::False;
    return Tri::Unknown;
}

} // namespace ruled

#endif
