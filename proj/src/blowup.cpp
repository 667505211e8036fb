#include "ruled/blowup.hpp"

#include <array>

#include "ruled/errors.hpp"

namespace ruled {

LatticeClass BlowupLattice::exceptional(size_t i) const {
    if (i >= k_) throw PreconditionError("BadCenter", "exceptional index out of range");
    LatticeClass x{0, 0, std::vector<long>(k_, 0)};
    x.exc[i] = 1;
    return x;
}

LatticeClass BlowupLattice::total_transform(const NumClass& c, size_t i, long mu) const {
    if (i >= k_) throw PreconditionError("BadCenter", "center index out of range");
    LatticeClass x = pullback(c);
    x.exc[i] -= mu;
    return x;
}

long BlowupLattice::intersect(const LatticeClass& x, const LatticeClass& y) const {
    long v = -e_ * x.a * y.a + x.a * y.b + y.a * x.b;
    size_t n = std::min(x.exc.size(), y.exc.size());
    for (size_t i = 0; i < n; ++i) v -= x.exc[i] * y.exc[i];
    return v;
}

bool BlowupLattice::projection_formula_check(const NumClass& c, const LatticeClass& d) const {
    long lhs = intersect(pullback(c), d);
    NumClass down = pushforward(d);
    long rhs = -e_ * c.m * down.m + c.m * down.bdeg + down.m * c.bdeg;
    return lhs == rhs;
}

long elm_via_lattice(long cd, long n, long m, long mu_c, long mu_d) {
    if (mu_c < 0 || mu_d < 0 || (n >= 1 && mu_c > n) || (m >= 1 && mu_d > m))
        throw PreconditionError("BadMultiplicity", "multiplicity out of range");
    // Basis (eps*C, eps*D, eps*f, E); the self-pairings of C and D never
    // occur in the contraction expansion, so they can be left at 0.
    const std::array<std::array<long, 4>, 4> gram{{{0, cd, n, 0},
                                                   {cd, 0, m, 0},
                                                   {n, m, 0, 0},
                                                   {0, 0, 0, -1}}};
    auto dot = [&](const std::array<long, 4>& x, const std::array<long, 4>& y) {
        long v = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v += x[i] * gram[i][j] * y[j];
        return v;
    };
    const std::array<long, 4> f_tilde{0, 0, 1, -1};
    std::array<long, 4> c_prime{1, 0, 0, -mu_c};
    std::array<long, 4> d_prime{0, 1, 0, -mu_d};
    for (int i = 0; i < 4; ++i) {
        c_prime[i] += (n - mu_c) * f_tilde[i];
        d_prime[i] += (m - mu_d) * f_tilde[i];
    }
    return dot(c_prime, d_prime);
}

} // namespace ruled
