#ifndef RULED_ELM_HPP
#define RULED_ELM_HPP

#include <memory>
#include <utility>
#include <vector>

#include "ruled/surface.hpp"

namespace ruled {

/// Apply one elementary transformation.  The position flag is validated
/// against the decidable criteria (decomposability, base-point status of
/// |-e_class|); undecidable flags are refused with InvalidPosition.  The
/// result keeps a persistent pointer to its parent.
RuledSurface transform_surface(std::shared_ptr<const RuledSurface> s, const ElmStep& step);

/// Image of an n-secant class C under the last transform of `s_prime`
/// (mu = multiplicity of the tracked curve at the center).
PicClass transform_class(const RuledSurface& s_prime, const PicClass& c, long mu);

/// Closed form for the transformed intersection number:
/// C'.D' = C.D + n*m - n*mu_D - m*mu_C.
long transformed_intersection(long cd, long n, long m, long mu_c, long mu_d);

/// How the transform center sits relative to two tracked unisecant curves.
enum class SectionIncidence { BothThrough, NeitherThrough, Mixed };

/// Class of the pushed-down intersection cycle of two transformed sections
/// whose original cycle had class b: b-P, b+P or b.
Divisor transformed_section_intersection_divisor(const Divisor& b, SectionIncidence inc,
                                                 const std::string& P);

/// Undo the last transform: checks that the inverse step applied to s_prime
/// reproduces the stored parent's invariants, then returns the parent.
std::shared_ptr<const RuledSurface> inverse_step(const RuledSurface& s_prime);

/// The step that undoes the last transform of s_prime.
ElmStep inverse_of(const RuledSurface& s_prime);

/// Multiplicity for the round trip of a tracked n-secant class: a class
/// transformed with multiplicity mu comes back with n - mu.
inline long inverse_multiplicity(long n, long mu) { return n - mu; }

/// Internal projection of the scroll defined by a base-point-free unisecant
/// H from a smooth image point over the declared center: one transform, the
/// system |nu*(H) - Pf|, degree and h0 each drop by one.  `smooth_image`
/// certifies that the center is outside the non-isomorphism locus.
std::pair<RuledSurface, PicClass> project_scroll(std::shared_ptr<const RuledSurface> s,
                                                 const PicClass& h, const ElmStep& step,
                                                 bool smooth_image);

/// Steps on X0 that build the given decomposable surface from the product
/// surface P1 x X; requires -e_class to reduce to a sum of named points.
std::vector<ElmStep> nagata_chain(const RuledSurface& s);

/// Forward steps on the minimal section after which decomposability is
/// certified (e > 2g-2); 0 if already certified decomposable.
long steps_to_certified_decomposable(const RuledSurface& s);

} // namespace ruled

#endif
