#pragma once

#include "lyap/quadratic.hpp"
#include "lyap/stratum.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lyap {

/*
 * Effective divisor on a hyperelliptic curve of genus g, supported at
 * Weierstrass points (labelled, at most 2g+2 of them) and at pairs of
 * involution-conjugate non-Weierstrass points.
 */
struct WeierstrassDivisor {
    int genus = 0;
    std::map<int, int> weierstrass_coeffs;           // label -> coefficient >= 0
    std::map<int, std::pair<int, int>> pair_coeffs;  // label -> (at P, at iota(P))

    int degree() const;
    std::string str() const; // e.g. "2W1+W2+(1,1)P3"

    void add_weierstrass(int label, int amount = 1);
    void add_pair_point(int label, bool conjugate, int amount = 1);
};

// Number of elements of the numerical semigroup <2, 2g+1> in [0, d]:
// h^0 of d times a Weierstrass point, by gap counting.
int semigroup_h0(int g, int d);

/*
 * h^0 of a Weierstrass-supported divisor. Reduction against the unique
 * degree-2 pencil: 2W ~ g12 and P + iota(P) ~ g12 strip D down to
 * k*g12 + base points (t at distinct Weierstrass points, u elsewhere);
 * with s = g-1-k-t-u the divisor is special iff s >= 0, where the base
 * points impose independent conditions and absorb nothing:
 *     h^0 = k+1           if s >= 0,
 *     h^0 = deg(D)-g+1    otherwise (Riemann-Roch, nonspecial).
 * A lone multiplicity r >= 2 at a non-Weierstrass point reduces no further
 * and is counted as r base points.
 */
int h0(const WeierstrassDivisor& divisor);

/*
 * Exact jump positions of h^0 along the prefix divisors of the slope
 * ordering P: H[j-1] is the first prefix length i with h^0(p'_1+...+p'_i) = j.
 * Slots of equal value within a conjugate pair go first to the point, then
 * to its conjugate. Requires P = slope_sequence(locus.induced).
 */
std::vector<int> exact_H(const HyperellipticLocus& locus, const SlopeSequence& P);

// Convenience overload computing the slope sequence internally.
std::vector<int> exact_H(const HyperellipticLocus& locus);

} // namespace lyap
