#include "lyap/selfcheck.hpp"

#include "lyap/bounds.hpp"
#include "lyap/enumerate.hpp"
#include "lyap/errors.hpp"
#include "lyap/quadratic.hpp"
#include "lyap/spectra.hpp"
#include "lyap/stratum.hpp"
#include "lyap/weierstrass.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lyap {

namespace {

std::string sig_str(const std::vector<int>& sig) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) os << ',';
        os << sig[i];
    }
    os << ')';
    return os.str();
}

template <typename F>
std::optional<std::string> for_each_stratum(int max_genus, F&& fn) {
    for (int g = 2; g <= max_genus; ++g)
        for (const auto& sig : partitions(2 * g - 2))
            if (auto fail = fn(make_abelian_stratum(sig)))
                return fail;
    return std::nullopt;
}

} // namespace

std::optional<std::string> check_slope_sums(int max_genus) {
    return for_each_stratum(max_genus, [](const AbelianStratum& s) -> std::optional<std::string> {
        SlopeSequence seq = slope_sequence(s);
        if (static_cast<int>(seq.entries.size()) != 2 * s.genus - 2)
            return s.str() + ": slope sequence has wrong length";
        if (seq.sum() != Rational(-(s.genus - 1)))
            return s.str() + ": slope sum " + seq.sum().str() + " != " +
                   Rational(-(s.genus - 1)).str();
        Rational prev(1);
        for (const auto& e : seq.entries) {
            if (e.value <= Rational(-1) || e.value >= Rational(0))
                return s.str() + ": slope " + e.value.str() + " outside (-1,0)";
            if (e.value > prev)
                return s.str() + ": slopes not weakly decreasing";
            prev = e.value;
        }
        return std::nullopt;
    });
}

std::optional<std::string> check_kappa_below_cap(int max_genus) {
    return for_each_stratum(max_genus, [](const AbelianStratum& s) -> std::optional<std::string> {
        if (kappa_mu(s) >= Rational(s.genus + 1, 2))
            return s.str() + ": kappa_mu " + kappa_mu(s).str() + " >= cap";
        return std::nullopt;
    });
}

std::optional<std::string> check_rational_roundtrip(int iterations) {
    std::mt19937_64 rng(20240801);
    std::uniform_int_distribution<long long> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
    std::uniform_int_distribution<long long> den(1, 1'000'000'000LL);
    for (int i = 0; i < iterations; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        if ((a + b) - b != a)
            return "(" + a.str() + " + " + b.str() + ") - " + b.str() + " != " + a.str();
        if (b.is_zero())
            continue;
        if ((a / b) * b != a)
            return "(" + a.str() + " / " + b.str() + ") * " + b.str() + " != " + a.str();
    }
    return std::nullopt;
}

std::optional<std::string> check_cover_genus_consistency(int max_abs_sum) {
    for (const auto& sig : base_genus0_signatures(max_abs_sum, -1, false)) {
        QuadraticSignature q = make_quadratic(sig);
        if (q.odd_count() % 2 != 0)
            return q.str() + ": odd singularity count is odd";
        if (std::all_of(sig.begin(), sig.end(), [](int d) { return d == -1; }))
            continue; // (-1^4): the cover is a torus with no zeros
        // induced_abelian throws InconsistentCover if the Riemann-Hurwitz
        // genus disagrees with the zero-order sum.
        InducedCover cover = induced_abelian(q);
        long long zero_sum = 0;
        for (int m : cover.stratum.signature) zero_sum += m;
        if (cover.cover_genus != (zero_sum + 2) / 2)
            return q.str() + ": genus mismatch";
    }
    return std::nullopt;
}

std::optional<std::string> check_max_sum_family(int max_k) {
    for (int total = 1; total <= max_k; ++total) {
        for (const auto& ks : partitions(total)) {
            // Q(2k_1, ..., 2k_n, -1^{2g+2}) with g = total + 1.
            int g = total + 1;
            std::vector<int> sig;
            for (int k : ks) sig.push_back(2 * k);
            sig.insert(sig.end(), 2 * g + 2, -1);
            QuadraticSignature q = make_quadratic(sig);
            if (!is_max_sum_locus(q))
                return q.str() + ": not recognized as max-sum";
            InducedCover cover = induced_abelian(q);
            if (cover.cover_genus != g)
                return q.str() + ": cover genus " + std::to_string(cover.cover_genus) + " != " +
                       std::to_string(g);
            if (cover.stratum.signature.size() != 2 * ks.size())
                return q.str() + ": expected " + std::to_string(2 * ks.size()) + " zeros";
            for (const auto& src : cover.zero_sources)
                if (src.kind == ZeroSource::Kind::single)
                    return q.str() + ": unexpected ramified zero";
            if (hyperelliptic_sum(hyperelliptic_locus(q)) != Rational(g + 1, 2))
                return q.str() + ": sum != (g+1)/2";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_semigroup_agreement(int max_genus, int degree_factor) {
    for (int g = 2; g <= max_genus; ++g) {
        for (int d = 0; d <= degree_factor * g; ++d) {
            WeierstrassDivisor divisor;
            divisor.genus = g;
            if (d > 0) divisor.add_weierstrass(0, d);
            if (h0(divisor) != semigroup_h0(g, d))
                return "g=" + std::to_string(g) + ", d=" + std::to_string(d) + ": reduction " +
                       std::to_string(h0(divisor)) + " != gap count " +
                       std::to_string(semigroup_h0(g, d));
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_divisor_bounds() {
    // Systematic small divisors plus a deterministic randomized batch.
    std::mt19937 rng(7041);
    std::uniform_int_distribution<int> coeff(0, 4);
    for (int g = 2; g <= 6; ++g) {
        auto verify = [&](const WeierstrassDivisor& d) -> std::optional<std::string> {
            int deg = d.degree();
            int h = h0(d);
            if (h < 1 || h < deg - g + 1)
                return "g=" + std::to_string(g) + ", D=" + d.str() + ": h0=" + std::to_string(h) +
                       " below Riemann-Roch floor";
            if (deg <= 2 * g - 2 && 2 * (h - 1) > deg)
                return "g=" + std::to_string(g) + ", D=" + d.str() + ": h0=" + std::to_string(h) +
                       " violates Clifford";
            if (deg == 0 && h != 1)
                return "g=" + std::to_string(g) + ": h0(0) != 1";
            return std::nullopt;
        };

        for (int c0 = 0; c0 <= 5; ++c0)
            for (int c1 = 0; c1 <= 3; ++c1)
                for (int a = 0; a <= 3; ++a)
                    for (int b = 0; b <= 3; ++b) {
                        WeierstrassDivisor d;
                        d.genus = g;
                        if (c0) d.add_weierstrass(0, c0);
                        if (c1) d.add_weierstrass(1, c1);
                        if (a) d.add_pair_point(0, false, a);
                        if (b) d.add_pair_point(0, true, b);
                        if (auto fail = verify(d))
                            return fail;
                    }

        for (int trial = 0; trial < 200; ++trial) {
            WeierstrassDivisor d;
            d.genus = g;
            for (int w = 0; w < std::min(2 * g + 2, 6); ++w)
                if (int c = coeff(rng)) d.add_weierstrass(w, c);
            for (int p = 0; p < 3; ++p) {
                if (int a = coeff(rng)) d.add_pair_point(p, false, a);
                if (int b = coeff(rng)) d.add_pair_point(p, true, b);
            }
            if (auto fail = verify(d))
                return fail;
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_canonical_h0(int max_abs_sum) {
    for (const auto& sig : base_genus0_signatures(max_abs_sum)) {
        HyperellipticLocus locus = hyperelliptic_locus(make_quadratic(sig));
        WeierstrassDivisor canonical;
        canonical.genus = locus.cover_genus;
        for (const auto& p : locus.point_types) {
            if (p.is_weierstrass) {
                canonical.add_weierstrass(p.singularity_index, p.order);
            } else {
                canonical.add_pair_point(p.singularity_index, false, p.order);
                canonical.add_pair_point(p.singularity_index, true, p.order);
            }
        }
        if (h0(canonical) != locus.cover_genus)
            return locus.quadratic.str() + ": h0(K) = " + std::to_string(h0(canonical)) +
                   " != g = " + std::to_string(locus.cover_genus);
    }
    return std::nullopt;
}

std::optional<std::string> check_theorem_main(int max_genus) {
    return for_each_stratum(max_genus, [](const AbelianStratum& s) -> std::optional<std::string> {
        BoundReport report = sum_upper_bound(s, ModeSpec::generic());
        Rational cap(s.genus + 1, 2);
        if (report.sum_upper > cap)
            return s.str() + ": generic sum bound " + report.sum_upper.str() + " exceeds cap " +
                   cap.str();
        std::vector<Rational> a = slope_sequence(s).values();
        bool paired = true;
        for (std::size_t i = 0; i + 1 < a.size(); i += 2)
            if (a[i] != a[i + 1]) { paired = false; break; }
        if ((report.sum_upper == cap) != paired)
            return s.str() + ": equality/pairing mismatch (sum " + report.sum_upper.str() + ")";
        return std::nullopt;
    });
}

std::optional<std::string> check_mode_monotonic(int max_genus) {
    return for_each_stratum(max_genus, [](const AbelianStratum& s) -> std::optional<std::string> {
        std::vector<Rational> generic = w_upper_bounds(s, ModeSpec::generic());
        std::vector<Rational> strict = w_upper_bounds(s, ModeSpec::non_hyp());
        for (int j = 0; j < s.genus; ++j)
            if (strict[j] > generic[j])
                return s.str() + ": non-hyp w_" + std::to_string(j + 1) + " = " + strict[j].str() +
                       " above generic " + generic[j].str();
        return std::nullopt;
    });
}

std::optional<std::string> check_exact_vs_yz(int max_abs_sum) {
    for (const auto& sig : base_genus0_signatures(max_abs_sum)) {
        HyperellipticLocus locus = hyperelliptic_locus(make_quadratic(sig));
        int g = locus.cover_genus;
        std::vector<int> H = exact_H(locus);
        for (int j = 2; j < g; ++j)
            if (H[j - 1] < h_floor(j, g, BoundMode::generic))
                return locus.quadratic.str() + ": H_" + std::to_string(j) + " = " +
                       std::to_string(H[j - 1]) + " below Clifford floor";
        std::vector<Rational> w = w_upper_bounds(locus.induced, ModeSpec::hyp_exact(locus));
        RationalSpectrum yz = hyperelliptic_w(locus);
        if (w != yz.values)
            return locus.quadratic.str() + ": exact bounds (" + RationalSpectrum{w}.str() +
                   ") != spectrum (" + yz.str() + ")";
    }
    return std::nullopt;
}

std::optional<std::string> check_table_consistency() {
    for (int genus : {3, 4, 5}) {
        for (const TableRow& row : nonvarying_table(genus)) {
            AbelianStratum s = make_abelian_stratum(row.signature, row.component);
            Rational cap(s.genus + 1, 2);
            if (row.sum > cap || row.sum < kappa_mu(s))
                return s.str() + ": tabulated sum " + row.sum.str() + " outside [kappa, cap]";
            if (row.sum_is_upper_bound_only) {
                if (sum_upper_bound(s, ModeSpec::generic()).effective_sum != row.sum)
                    return s.str() + ": bound-only row disagrees with generic bound";
                continue;
            }
            Rational total(1);
            for (const Rational& w : row.w) total += w;
            if (total != row.sum)
                return s.str() + ": w entries sum to " + total.str() + ", row says " + row.sum.str();

            ModeSpec mode = row.quadratic
                                ? ModeSpec::hyp_exact(hyperelliptic_locus(make_quadratic(*row.quadratic)))
                                : ModeSpec::non_hyp();
            std::vector<Rational> w_up = w_upper_bounds(s, mode);
            for (std::size_t i = 0; i < row.w.size(); ++i)
                if (row.w[i] > w_up[i + 1])
                    return s.str() + ": tabulated w_" + std::to_string(i + 2) + " = " +
                           row.w[i].str() + " above bound " + w_up[i + 1].str();
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_partial_sums(int max_genus) {
    return for_each_stratum(max_genus, [](const AbelianStratum& s) -> std::optional<std::string> {
        for (ModeSpec mode : {ModeSpec::generic(), ModeSpec::non_hyp()}) {
            BoundReport report = sum_upper_bound(s, mode);
            if (partial_sum_bound(s, mode, s.genus) != report.sum_upper)
                return s.str() + ": partial sum at k=g differs from full sum";
            Rational prev_increment(2);
            Rational prev_total(0);
            for (int k = 1; k <= s.genus; ++k) {
                Rational total = partial_sum_bound(s, mode, k);
                Rational increment = total - prev_total;
                if (total < prev_total || increment > prev_increment)
                    return s.str() + ": partial sums not concave at k=" + std::to_string(k);
                prev_increment = increment;
                prev_total = total;
            }
        }
        return std::nullopt;
    });
}

std::optional<std::string> check_cross_formula(int max_abs_sum, int max_entry) {
    for (const auto& sig : base_genus0_signatures(max_abs_sum, max_entry)) {
        // hyperelliptic_sum throws CrossCheckFailure when the two formulas
        // disagree; evaluating it is the check.
        hyperelliptic_sum(hyperelliptic_locus(make_quadratic(sig)));
    }
    return std::nullopt;
}

std::optional<std::string> check_table_regeneration() {
    for (int genus : {3, 4, 5}) {
        for (const TableRow& row : nonvarying_table(genus)) {
            if (!row.quadratic)
                continue;
            HyperellipticLocus locus = hyperelliptic_locus(make_quadratic(*row.quadratic));
            if (locus.induced.signature != row.signature)
                return sig_str(*row.quadratic) + " induces " + locus.induced.str() + ", row says " +
                       sig_str(row.signature);
            RationalSpectrum spectrum = hyperelliptic_w(locus);
            std::vector<Rational> expected = {Rational(1)};
            expected.insert(expected.end(), row.w.begin(), row.w.end());
            if (spectrum.values != expected)
                return sig_str(*row.quadratic) + ": spectrum " + spectrum.str() +
                       " does not match table row";
            if (hyperelliptic_sum(locus) != row.sum)
                return sig_str(*row.quadratic) + ": sum mismatch";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_mn_family(int max_n) {
    for (int n = 4; n <= max_n; n += 2) {
        RationalSpectrum spectrum = mn_spectrum(n);
        int g = n - 1;
        if (spectrum.sum() != Rational(g + 1, 2))
            return "N=" + std::to_string(n) + ": sum " + spectrum.sum().str() + " != (g+1)/2";
        std::vector<int> sig = {n - 2, n - 2};
        sig.insert(sig.end(), 2 * n, -1);
        RationalSpectrum via_locus = hyperelliptic_w(hyperelliptic_locus(make_quadratic(sig)));
        if (spectrum.values != via_locus.values)
            return "N=" + std::to_string(n) + ": cyclic-cover spectrum differs from locus spectrum";
    }
    return std::nullopt;
}

std::vector<CheckResult> run_library_checks() {
    auto wrap = [](const char* name, std::optional<std::string> fail) {
        CheckResult r;
        r.name = name;
        r.pass = !fail;
        r.detail = fail.value_or("");
        return r;
    };

    std::vector<CheckResult> results;
    results.push_back(wrap("slope sums and ranges, g <= 10", check_slope_sums(10)));
    results.push_back(wrap("kappa_mu below (g+1)/2, g <= 10", check_kappa_below_cap(10)));
    results.push_back(wrap("rational round-trip", check_rational_roundtrip(2000)));
    results.push_back(wrap("cover genus two ways, |d| sum <= 60", check_cover_genus_consistency(60)));
    results.push_back(wrap("max-sum family structure, k <= 8", check_max_sum_family(8)));
    results.push_back(wrap("reduction rule vs gap counting, g <= 20, d <= 6g",
                           check_semigroup_agreement(20, 6)));
    results.push_back(wrap("Clifford and Riemann-Roch bounds on divisors", check_divisor_bounds()));
    results.push_back(wrap("canonical divisor h0 = g, |d| sum <= 40", check_canonical_h0(40)));
    results.push_back(wrap("sum bound <= (g+1)/2 with equality iff paired slopes, g <= 10",
                           check_theorem_main(10)));
    results.push_back(wrap("non-hyp bounds below generic bounds, g <= 10", check_mode_monotonic(10)));
    results.push_back(wrap("exact bounds equal hyperelliptic spectra, |d| sum <= 40",
                           check_exact_vs_yz(40)));
    results.push_back(wrap("table rows within engine bounds", check_table_consistency()));
    results.push_back(wrap("partial sums monotone and concave, g <= 10", check_partial_sums(10)));
    results.push_back(wrap("w-spectrum sum equals sum formula, |d| sum <= 60, entries <= 19",
                           check_cross_formula(60, 19)));
    results.push_back(wrap("hyp table rows regenerate from quadratic signatures",
                           check_table_regeneration()));
    results.push_back(wrap("cyclic-cover spectra match loci, N <= 40", check_mn_family(40)));
    return results;
}

} // namespace lyap
