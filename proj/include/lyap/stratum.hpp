#pragma once

#include "lyap/rational.hpp"

#include <string>
#include <vector>

namespace lyap {

// Connected-component label of a stratum. Metadata only: it is carried
// through reports and tables, never computed from the signature.
enum class Component { unspecified, hyp, odd, even, non_hyp };

const char* component_name(Component c);

/*
 * Stratum of abelian differentials: pairs (X, omega) where omega has
 * distinct zeros of orders m_1, ..., m_k with sum 2g - 2, g >= 2.
 */
struct AbelianStratum {
    std::vector<int> signature;       // zero orders, descending
    std::vector<int> original_order;  // zero orders as given (labeling only)
    Component component = Component::unspecified;
    int genus = 0;

    bool is_minimal_signature() const; // signature == (1, 1, ..., 1)
    std::string str() const;           // "(2,2,1,1)" in canonical order
};

// Validates and canonicalizes a signature. Throws EmptySignature, InvalidOrder
// (entry < 1), or NonIntegralGenus (odd order sum).
AbelianStratum make_abelian_stratum(const std::vector<int>& signature,
                                    Component component = Component::unspecified);

// One value of the slope sequence, with provenance: the j-th slot of the
// zero at position zero_index in the canonical signature has value
// -j / (m_{zero_index} + 1).
struct SlopeEntry {
    Rational value;
    int zero_index = 0;  // position in AbelianStratum::signature
    int mult_index = 0;  // j, 1 <= j <= m_{zero_index}
};

struct SlopeSequence {
    std::vector<SlopeEntry> entries; // length 2g - 2, value descending

    std::vector<Rational> values() const;
    Rational sum() const;
};

/*
 * The multiset { -j/(m_i+1) : 1 <= j <= m_i } sorted descending.
 * Ties are broken by (zero_index asc, mult_index asc); tie order is
 * observable only in the provenance labels, never in bound values.
 */
SlopeSequence slope_sequence(const AbelianStratum& s);

// (1/12) * sum of m_i (m_i + 2) / (m_i + 1); lower bound for the sum of
// Lyapunov exponents over the stratum.
Rational kappa_mu(const AbelianStratum& s);

} // namespace lyap
