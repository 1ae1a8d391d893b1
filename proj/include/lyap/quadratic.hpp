#pragma once

#include "lyap/stratum.hpp"

#include <string>
#include <vector>

namespace lyap {

/*
 * Stratum of meromorphic quadratic differentials with singularity orders
 * d_1, ..., d_n, each >= -1 and != 0 (at most simple poles), summing to
 * 4 * base_genus - 4.
 */
struct QuadraticSignature {
    std::vector<int> orders; // as given; labels refer to this order
    int base_genus = 0;

    int pole_count() const;
    int odd_count() const; // poles included
    std::string str() const;
};

QuadraticSignature make_quadratic(const std::vector<int>& orders);

// Identity of a zero of the induced abelian differential on the double cover.
// Odd-order singularities lift to a single ramified zero; even-order ones to
// a swapped pair of zeros; simple poles to a ramification point with no zero.
struct ZeroSource {
    enum class Kind { single, pair_first, pair_second };
    Kind kind = Kind::single;
    int singularity_index = 0; // index into QuadraticSignature::orders
};

// Result of the canonical (orientation) double cover q -> omega^2.
struct InducedCover {
    AbelianStratum stratum;
    int cover_genus = 0;
    std::vector<ZeroSource> zero_sources; // aligned with stratum.signature
};

/*
 * Zero multiset of the double cover: order d gives two zeros of order d/2
 * (d even) or one zero of order d+1 (d odd); poles give no zero. The cover
 * genus comes from Riemann-Hurwitz over the odd-order branch points and is
 * cross-checked against the zero-order sum (InconsistentCover on mismatch).
 * The cover is assumed connected (q not a global square).
 */
InducedCover induced_abelian(const QuadraticSignature& q);

// Per-singularity point data of a hyperelliptic locus: the cover is a
// hyperelliptic curve, ramified zeros sit at Weierstrass points.
struct LocusPoint {
    bool is_weierstrass = false; // true: single zero at a Weierstrass point
    int order = 0;               // zero order on the cover (per point)
    int singularity_index = 0;
};

/*
 * Hyperelliptic locus: base genus 0, order sum -4; the double cover has
 * genus B/2 - 1 where B counts odd-order singularities (poles included).
 */
struct HyperellipticLocus {
    QuadraticSignature quadratic;
    int cover_genus = 0;
    AbelianStratum induced;
    std::vector<LocusPoint> point_types;    // zeros only, one per singularity with d >= 1
    std::vector<ZeroSource> zero_sources;   // aligned with induced.signature
};

// Throws NotHyperelliptic (base genus != 0) or GenusTooSmall (cover genus < 2).
HyperellipticLocus hyperelliptic_locus(const QuadraticSignature& q);

// True iff every odd-order entry is a pole, i.e. the signature has the shape
// (2k_1, ..., 2k_n, -1^{2g+2}) attaining the maximal exponent sum (g+1)/2.
bool is_max_sum_locus(const QuadraticSignature& q);

} // namespace lyap
