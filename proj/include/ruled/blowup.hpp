#ifndef RULED_BLOWUP_HPP
#define RULED_BLOWUP_HPP

#include <cstddef>
#include <vector>

#include "ruled/surface.hpp"

namespace ruled {

/// Class on a blow-up of a ruled surface: coordinates over the basis
/// (X0, f, E1..Ek).
struct LatticeClass {
    long a = 0; // X0 coefficient
    long b = 0; // fiber coefficient
    std::vector<long> exc;

    friend LatticeClass operator+(LatticeClass x, const LatticeClass& y) {
        x.a += y.a;
        x.b += y.b;
        if (x.exc.size() < y.exc.size()) x.exc.resize(y.exc.size(), 0);
        for (size_t i = 0; i < y.exc.size(); ++i) x.exc[i] += y.exc[i];
        return x;
    }
    friend LatticeClass operator*(long k, LatticeClass x) {
        x.a *= k;
        x.b *= k;
        for (auto& c : x.exc) c *= k;
        return x;
    }
    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
};

/**
 * Intersection lattice of a blow-up at k centers: block form
 * (X0.f=1, f^2=0, X0^2=-e) plus a (-1) diagonal on the exceptional classes,
 * orthogonal to everything pulled back.  Pure bilinear algebra; the caller
 * supplies multiplicities.
 */
class BlowupLattice {
public:
    BlowupLattice(long e, size_t centers) : e_(e), k_(centers) {}

    long e() const { return e_; }
    size_t centers() const { return k_; }

    LatticeClass pullback(const NumClass& c) const { return {c.m, c.bdeg, std::vector<long>(k_, 0)}; }
    LatticeClass exceptional(size_t i) const;

    /// Strict transform of C with multiplicity mu at center i:
    /// C~ = eps*C - mu*E_i.
    LatticeClass total_transform(const NumClass& c, size_t i, long mu) const;

    long intersect(const LatticeClass& x, const LatticeClass& y) const;

    /// Push-forward: drop the exceptional coordinates.
    NumClass pushforward(const LatticeClass& x) const { return {x.a, x.b}; }

    /// eps*(C) . D == C . eps_*(D)
    bool projection_formula_check(const NumClass& c, const LatticeClass& d) const;

private:
    long e_;
    size_t k_;
};

/**
 * Transformed intersection number computed by honest blow-up bookkeeping:
 * blow up one center, take strict transforms C~ = C - muC*E, D~ = D - muD*E
 * and f~ = f - E, then contract, so that C' = C~ + (n - muC) f~ and
 * D' = D~ + (m - muD) f~.  Evaluated as vectors over the sublattice spanned
 * by (eps*C, eps*D, eps*f, E) with Gram matrix built from C.D, C.f = n,
 * D.f = m, f^2 = 0, E^2 = -1.  Deliberately does not use the closed-form
 * expansion; it is the independent oracle for it.
 */
long elm_via_lattice(long cd, long n, long m, long mu_c, long mu_d);

} // namespace ruled

#endif
