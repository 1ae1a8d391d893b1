#pragma once

#include "lyap/quadratic.hpp"
#include "lyap/rational.hpp"
#include "lyap/stratum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lyap {

enum class BoundMode { generic, non_hyperelliptic, hyperelliptic_exact };

const char* bound_mode_name(BoundMode m);

// Mode plus, for hyperelliptic_exact, the locus supplying the exact h^0 data.
struct ModeSpec {
    BoundMode mode = BoundMode::generic;
    std::optional<HyperellipticLocus> locus;

    static ModeSpec generic() { return {BoundMode::generic, std::nullopt}; }
    static ModeSpec non_hyp() { return {BoundMode::non_hyperelliptic, std::nullopt}; }
    static ModeSpec hyp_exact(HyperellipticLocus l) { return {BoundMode::hyperelliptic_exact, std::move(l)}; }
};

enum class EqualityCase { hyperelliptic_max_sum, minimal_stratum_possible, not_equality };

const char* equality_case_name(EqualityCase c);

struct BoundReport {
    AbelianStratum stratum;
    BoundMode mode = BoundMode::generic;
    std::vector<Rational> w_upper;  // length g, weakly decreasing, w_upper[0] = 1
    Rational sum_upper;             // sum of w_upper
    Rational theorem_cap;           // (g+1)/2
    Rational effective_sum;         // min(sum_upper, theorem_cap)
    Rational kappa_lower;           // kappa_mu
    EqualityCase equality_case = EqualityCase::not_equality;
    std::vector<int> H_used;        // length g
    bool assumption_required = false;
};

/*
 * Clifford floor for the h^0 jump position H_j: always 1 for j=1 and 2g-2
 * for j=g (the full divisor is canonical); in between, 2j-2 in generic mode
 * and 2j-1 when the fiber is known non-hyperelliptic (strict Clifford).
 */
int h_floor(int j, int g, BoundMode mode);

// Per-quotient slope bounds w_j <= 1 + a_{H_j}, w_1 = 1, as exact rationals.
std::vector<Rational> w_upper_bounds(const AbelianStratum& s, const ModeSpec& mode);

// Full report: sum of the w bounds, the (g+1)/2 cap, their min, the
// kappa_mu lower bound and the equality classification.
BoundReport sum_upper_bound(const AbelianStratum& s, const ModeSpec& mode);

// Upper bound for the sum of the k largest exponents carried by a rank-2k
// sub-variation: the k leading w bounds.
Rational partial_sum_bound(const AbelianStratum& s, const ModeSpec& mode, int k);

// Upper bound for the i-th exponent (1-based). Valid only under the
// splitting assumption on the Hodge bundle; callers must surface that.
Rational individual_bound(const AbelianStratum& s, const ModeSpec& mode, int i);

/*
 * Stratum/locus-level equality classification for the (g+1)/2 cap:
 * a max-sum hyperelliptic locus always attains it; in the minimal stratum
 * (1^{2g-2}) equality is possible for special curves but undecidable from
 * the signature; everywhere else the bound is strict.
 */
EqualityCase classify_equality(const AbelianStratum& s,
                               const std::optional<HyperellipticLocus>& locus);

// Exact residual r = L - kappa_mu; the Siegel-Veech constant is (3/pi^2) r.
// Throws BelowLowerBound when L < kappa_mu.
Rational siegel_veech_residual(const Rational& L, const AbelianStratum& s);

} // namespace lyap
