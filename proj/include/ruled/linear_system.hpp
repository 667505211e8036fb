#ifndef RULED_LINEAR_SYSTEM_HPP
#define RULED_LINEAR_SYSTEM_HPP

#include <string>
#include <vector>

#include "ruled/count.hpp"
#include "ruled/surface.hpp"
#include "ruled/tri.hpp"

namespace ruled {

// ---- dimensions ----------------------------------------------------------

/// h^i of |m X0 + b f| on a decomposable surface: sum over the twists
/// b + k*e_class, k = 0..m.  Exact up to the curve oracle.
Count h_i_decomposable(const RuledSurface& s, long m, const Divisor& b, int i);

/// Upper bound for h^i (i > 0) on an arbitrary surface: [0, sum of the
/// twist values]; collapses to exact 0 when every summand is nonspecial.
Count h_i_upper_bound(const RuledSurface& s, long m, const Divisor& b, int i);

/// h0 dispatch: decomposable sum, chain recursion for unisecant systems,
/// the nonspecial-b equality on arbitrary surfaces, else a sound interval.
Count h0_system(const RuledSurface& s, const PicClass& h);

/// h0 of a unisecant system on a chain surface: rewrite through each step
/// down to the decomposable anchor, subtracting one per step whose center is
/// not a base point of the rewritten parent system.
Count h0_chain(const RuledSurface& s, const PicClass& h);

Count h1_system(const RuledSurface& s, const PicClass& h);

// ---- base locus ----------------------------------------------------------

enum class BaseLocusKind {
    FreeOnGenerator,
    PointOnX0,
    PointOnX1,
    SinglePointUnlocated,
    FixedGenerator,
    Unknown,
};

const char* to_string(BaseLocusKind k);

struct BaseLocusEntry {
    std::string P;      // generator
    BaseLocusKind kind;
    std::string witness;
};

std::vector<BaseLocusEntry> base_locus(const RuledSurface& s, long m, const Divisor& b);

Tri is_bpf_system(const RuledSurface& s, long m, const Divisor& b);

// ---- classification ------------------------------------------------------

/// Irreducibility of the generic member of a unisecant system |X0 + b f|.
Tri generic_member_irreducible(const RuledSurface& s, const Divisor& b);

/// Very-ampleness with the name of the criterion that decided.
Tri is_very_ample_surface(const RuledSurface& s, long m, const Divisor& b,
                          std::string* criterion = nullptr);

/// A component of the non-isomorphism locus K.
struct IsoComponent {
    std::string kind;  // "curve", "generator_point", "generator"
    std::string label; // e.g. "X0", "X0 ^ Pf"
    std::string P;     // generator involved, if any
    std::string witness;
};

struct IsoLocus {
    Tri empty = Tri::Unknown;
    std::vector<IsoComponent> components;
    std::string note;
};

IsoLocus isomorphism_locus(const RuledSurface& s, const PicClass& h);

enum class SingularityKind {
    GeneratorsMeet,
    TorsalGenerator,
    DoubleGenerator,
    InfinitelyNearDouble,
    MultipleDirectrixImage,
    IsolatedOnDirectrix,
};

const char* to_string(SingularityKind k);

struct SingularityEntry {
    SingularityKind kind;
    std::string section; // directrix involved ("X0"/"X1"), if any
    std::string P, Q;
    long multiplicity = 0; // certified lower bound for multiple images
    std::string witness;   // the h0 drop pattern that fired
};

struct SingularityReport {
    std::vector<SingularityEntry> entries;
    Tri birational = Tri::Unknown;
};

SingularityReport singularity_report(const RuledSurface& s, const PicClass& h);

struct LinearSystemReport {
    Count h0;
    Count h1;
    long degree = 0; // H^2 for unisecant systems
    std::vector<BaseLocusEntry> base_locus;
    Tri generic_member_irreducible = Tri::Unknown;
    Tri bpf = Tri::Unknown;
    Tri very_ample = Tri::Unknown;
    std::string va_criterion;
};

LinearSystemReport classify(const RuledSurface& s, const PicClass& h);

} // namespace ruled

#endif
