#include "lyap/weierstrass.hpp"

#include "lyap/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace lyap {

int WeierstrassDivisor::degree() const {
    int deg = 0;
    for (const auto& [label, c] : weierstrass_coeffs) deg += c;
    for (const auto& [label, ab] : pair_coeffs) deg += ab.first + ab.second;
    return deg;
}

std::string WeierstrassDivisor::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : weierstrass_coeffs) {
        if (c == 0) continue;
        if (!first) os << '+';
        if (c > 1) os << c;
        os << 'W' << label;
        first = false;
    }
    for (const auto& [label, ab] : pair_coeffs) {
        if (ab.first == 0 && ab.second == 0) continue;
        if (!first) os << '+';
        os << '(' << ab.first << ',' << ab.second << ")P" << label;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

void WeierstrassDivisor::add_weierstrass(int label, int amount) {
    weierstrass_coeffs[label] += amount;
}

void WeierstrassDivisor::add_pair_point(int label, bool conjugate, int amount) {
    auto& ab = pair_coeffs[label];
    (conjugate ? ab.second : ab.first) += amount;
}

int semigroup_h0(int g, int d) {
    if (g < 2)
        throw Error(ErrorKind::GenusTooSmall, "semigroup_h0 needs g >= 2, got " + std::to_string(g));
    if (d < 0)
        throw Error(ErrorKind::IndexOutOfRange, "semigroup_h0 needs d >= 0, got " + std::to_string(d));
    // <2, 2g+1> = all even numbers plus all odd numbers >= 2g+1.
    int evens = d / 2 + 1;
    int odds = 0;
    if (d >= 2 * g + 1)
        odds = (d - (2 * g + 1)) / 2 + 1;
    return evens + odds;
}

int h0(const WeierstrassDivisor& divisor) {
    int g = divisor.genus;
    if (g < 2)
        throw Error(ErrorKind::GenusTooSmall, "h0 needs genus >= 2, got " + std::to_string(g));

    int k = 0; // multiples of the g12 split off
    int t = 0; // distinct Weierstrass base points left over
    int u = 0; // non-Weierstrass base point multiplicity left over
    for (const auto& [label, c] : divisor.weierstrass_coeffs) {
        if (c < 0)
            throw Error(ErrorKind::InvalidOrder, "negative Weierstrass coefficient");
        k += c / 2;
        t += c % 2;
    }
    for (const auto& [label, ab] : divisor.pair_coeffs) {
        if (ab.first < 0 || ab.second < 0)
            throw Error(ErrorKind::InvalidOrder, "negative pair coefficient");
        k += std::min(ab.first, ab.second);
        u += std::abs(ab.first - ab.second);
    }

    int s = g - 1 - k - t - u;
    if (s >= 0)
        return k + 1;
    return divisor.degree() - g + 1;
}

std::vector<int> exact_H(const HyperellipticLocus& locus, const SlopeSequence& P) {
    int g = locus.cover_genus;
    if (static_cast<int>(P.entries.size()) != 2 * g - 2)
        throw Error(ErrorKind::LengthMismatch,
                    "slope sequence has " + std::to_string(P.entries.size()) + " entries, expected " +
                        std::to_string(2 * g - 2));

    WeierstrassDivisor prefix;
    prefix.genus = g;

    std::vector<int> H;
    H.reserve(g);
    // Jump counting starts at 0 so that the first point registers H_1 = 1
    // (h^0 of a single point is 1 for g >= 1).
    int h_prev = 0;
    for (std::size_t i = 0; i < P.entries.size(); ++i) {
        const ZeroSource& src = locus.zero_sources.at(P.entries[i].zero_index);
        switch (src.kind) {
        case ZeroSource::Kind::single:
            prefix.add_weierstrass(src.singularity_index);
            break;
        case ZeroSource::Kind::pair_first:
            prefix.add_pair_point(src.singularity_index, false);
            break;
        case ZeroSource::Kind::pair_second:
            prefix.add_pair_point(src.singularity_index, true);
            break;
        }
        // The slot interleaving keeps conjugate multiplicities within 1 of
        // each other, so lone multiplicities r >= 2 never occur here.
        for (const auto& [label, ab] : prefix.pair_coeffs)
            if (std::abs(ab.first - ab.second) > 1)
                throw Error(ErrorKind::NonMonotoneH,
                            "unbalanced conjugate pair in prefix " + prefix.str());

        int h = h0(prefix);
        if (h != h_prev && h != h_prev + 1)
            throw Error(ErrorKind::NonMonotoneH,
                        "h^0 stepped from " + std::to_string(h_prev) + " to " + std::to_string(h) +
                            " at prefix " + prefix.str());
        if (h == h_prev + 1)
            H.push_back(static_cast<int>(i) + 1);
        h_prev = h;
    }

    // First point always contributes; the full divisor is canonical.
    if (static_cast<int>(H.size()) != g || H.front() != 1 || H.back() != 2 * g - 2)
        throw Error(ErrorKind::NonMonotoneH, "jump profile has wrong shape for " + locus.quadratic.str());
    return H;
}

std::vector<int> exact_H(const HyperellipticLocus& locus) {
    return exact_H(locus, slope_sequence(locus.induced));
}

} // namespace lyap
