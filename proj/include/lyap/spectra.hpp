#pragma once

#include "lyap/quadratic.hpp"
#include "lyap/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lyap {

// Finite descending list of exact rationals (a w- or exponent spectrum).
struct RationalSpectrum {
    std::vector<Rational> values;

    Rational sum() const;
    std::size_t size() const { return values.size(); }
    std::string str() const; // "1, 3/5, 1/5"
};

// One row of the genus 3/4/5 non-varying tables.
struct TableRow {
    std::vector<int> signature;
    Component component = Component::unspecified;
    std::vector<Rational> w;  // w_2, ..., w_g
    Rational sum;             // 1 + sum of w entries
    bool sum_is_upper_bound_only = false;        // the (1,1,1,1) row records only "<= 2"
    std::optional<std::vector<int>> quadratic;   // hyp rows: regenerating signature
};

/*
 * Exact hyperelliptic w-spectrum: 1 together with, for each singularity
 * order d >= 1, the values 1 - 2k/(d+2) over 0 < 2k <= d+1. Poles
 * contribute nothing; the count always lands on the cover genus.
 */
RationalSpectrum hyperelliptic_w(const HyperellipticLocus& locus);

/*
 * Exponent sum over a hyperelliptic locus: (1/4) * sum of 1/(d_j+2) over
 * odd d_j, poles included (each pole contributes 1). Cross-checked against
 * the w-spectrum sum; CrossCheckFailure if the two routes disagree.
 */
Rational hyperelliptic_sum(const HyperellipticLocus& locus);

// Embedded rows of the genus-3/4/5 tables; UnsupportedGenus otherwise.
std::vector<TableRow> nonvarying_table(int genus);

/*
 * Genus of the cyclic cover w^N = prod (z - z_i)^{a_i} of the 4-punctured
 * sphere: N + 1 - (1/2) * sum gcd(a_i, N). Requires 0 < a_i <= N,
 * gcd(N, a_1..a_4) = 1 and sum a_i = 0 mod N.
 */
int cyclic_cover_genus(int N, const std::array<int, 4>& powers);

// Spectrum {2/N, 2/N, 4/N, 4/N, ..., (N-2)/N, (N-2)/N, 1} of the family
// M_N(N-1, 1, N-1, 1), descending; N even, N >= 4.
RationalSpectrum mn_spectrum(int N);

// Spectrum of the stairs surface S(N): odd numerators over N for N = 2g-1,
// even numerators over N for N = 2g.
RationalSpectrum stairs_spectrum(int N);

struct ReferenceSpecials {
    RationalSpectrum windtree;               // (1, 2/3, 2/3, 1/3, 1/3)
    std::vector<int> windtree_stratum;       // (2,2,2,2)
    std::vector<Rational> prym_wd6_candidates; // {4/7, 2/7, 1/7}
    RationalSpectrum primitive_31;           // (1, 1/2, 1/4)
    std::vector<int> primitive_31_stratum;   // (3,1)
};

ReferenceSpecials reference_specials();

} // namespace lyap
