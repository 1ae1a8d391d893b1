#include "lyap/bounds.hpp"

#include "lyap/errors.hpp"
#include "lyap/weierstrass.hpp"

#include <algorithm>

namespace lyap {

const char* bound_mode_name(BoundMode m) {
    switch (m) {
    case BoundMode::generic: return "generic";
    case BoundMode::non_hyperelliptic: return "non-hyp";
    case BoundMode::hyperelliptic_exact: return "hyp-exact";
    }
    return "generic";
}

const char* equality_case_name(EqualityCase c) {
    switch (c) {
    case EqualityCase::hyperelliptic_max_sum: return "hyperelliptic-max-sum";
    case EqualityCase::minimal_stratum_possible: return "minimal-stratum-possible";
    case EqualityCase::not_equality: return "not-equality";
    }
    return "not-equality";
}

int h_floor(int j, int g, BoundMode mode) {
    if (j < 1 || j > g)
        throw Error(ErrorKind::IndexOutOfRange,
                    "j = " + std::to_string(j) + " outside 1..g = " + std::to_string(g));
    if (mode == BoundMode::hyperelliptic_exact)
        throw Error(ErrorKind::ModeMismatch, "h_floor is bypassed by exact_H in hyp-exact mode");
    if (j == 1) return 1;
    if (j == g) return 2 * g - 2; // the full divisor is canonical
    return mode == BoundMode::non_hyperelliptic ? 2 * j - 1 : 2 * j - 2;
}

namespace {

std::vector<int> jump_positions(const AbelianStratum& s, const ModeSpec& spec) {
    int g = s.genus;
    if (spec.mode == BoundMode::hyperelliptic_exact) {
        if (!spec.locus)
            throw Error(ErrorKind::ModeMismatch, "hyp-exact mode needs a quadratic signature");
        if (spec.locus->induced.signature != s.signature)
            throw Error(ErrorKind::ModeMismatch,
                        "locus " + spec.locus->quadratic.str() + " induces " +
                            spec.locus->induced.str() + ", not " + s.str());
        return exact_H(*spec.locus);
    }
    std::vector<int> H(g);
    for (int j = 1; j <= g; ++j) H[j - 1] = h_floor(j, g, spec.mode);
    return H;
}

} // namespace

std::vector<Rational> w_upper_bounds(const AbelianStratum& s, const ModeSpec& mode) {
    std::vector<int> H = jump_positions(s, mode);
    SlopeSequence slopes = slope_sequence(s);

    std::vector<Rational> w;
    w.reserve(s.genus);
    w.push_back(Rational(1));
    for (int j = 2; j <= s.genus; ++j)
        w.push_back(Rational(1) + slopes.entries.at(H[j - 1] - 1).value);

    if (!std::is_sorted(w.begin(), w.end(), std::greater<Rational>()))
        throw Error(ErrorKind::CrossCheckFailure, "w bounds not weakly decreasing for " + s.str());
    return w;
}

BoundReport sum_upper_bound(const AbelianStratum& s, const ModeSpec& mode) {
    BoundReport report;
    report.stratum = s;
    report.mode = mode.mode;
    report.H_used = jump_positions(s, mode);
    report.w_upper = w_upper_bounds(s, mode);
    for (const Rational& w : report.w_upper) report.sum_upper += w;
    report.theorem_cap = Rational(s.genus + 1, 2);
    report.effective_sum = std::min(report.sum_upper, report.theorem_cap);
    report.kappa_lower = kappa_mu(s);
    report.equality_case = classify_equality(s, mode.locus);
    if (report.effective_sum < report.kappa_lower)
        throw Error(ErrorKind::CrossCheckFailure,
                    "upper bound " + report.effective_sum.str() + " below kappa_mu " +
                        report.kappa_lower.str() + " for " + s.str());
    return report;
}

Rational partial_sum_bound(const AbelianStratum& s, const ModeSpec& mode, int k) {
    if (k < 1 || k > s.genus)
        throw Error(ErrorKind::IndexOutOfRange,
                    "k = " + std::to_string(k) + " outside 1..g = " + std::to_string(s.genus));
    std::vector<Rational> w = w_upper_bounds(s, mode);
    Rational total;
    for (int i = 0; i < k; ++i) total += w[i];
    return total;
}

Rational individual_bound(const AbelianStratum& s, const ModeSpec& mode, int i) {
    if (i < 1 || i > s.genus)
        throw Error(ErrorKind::IndexOutOfRange,
                    "i = " + std::to_string(i) + " outside 1..g = " + std::to_string(s.genus));
    return w_upper_bounds(s, mode).at(i - 1);
}

EqualityCase classify_equality(const AbelianStratum& s,
                               const std::optional<HyperellipticLocus>& locus) {
    if (locus && is_max_sum_locus(locus->quadratic))
        return EqualityCase::hyperelliptic_max_sum;
    if (s.is_minimal_signature())
        return EqualityCase::minimal_stratum_possible;
    return EqualityCase::not_equality;
}

Rational siegel_veech_residual(const Rational& L, const AbelianStratum& s) {
    Rational kappa = kappa_mu(s);
    if (L < kappa)
        throw Error(ErrorKind::BelowLowerBound,
                    "L = " + L.str() + " below kappa_mu = " + kappa.str() + " for " + s.str());
    return L - kappa;
}

} // namespace lyap
