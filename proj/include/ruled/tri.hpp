#ifndef RULED_TRI_HPP
#define RULED_TRI_HPP

#include <string>

namespace ruled {

/// Three-valued answer for predicates that may be undecidable with the
/// declared data.  Unknown must propagate: it never silently degrades to a
/// boolean.
enum class Tri { False = 0, True = 1, Unknown = 2 };

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

/// Three-valued conjunction (Kleene).
inline Tri operator&&(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::True && b == Tri::True) return Tri::True;
    return Tri::Unknown;
}

/// Three-valued disjunction (Kleene).
inline Tri operator||(Tri a, Tri b) {
    if (a == Tri::True || b == Tri::True) return Tri::True;
    if (a == Tri::False && b == Tri::False) return Tri::False;
    return Tri::Unknown;
}

inline Tri operator!(Tri a) {
    if (a == Tri::Unknown) return Tri::Unknown;
    return a == Tri::True ? Tri::False : Tri::True;
}

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        default: return "unknown";
    }
}

} // namespace ruled

#endif
