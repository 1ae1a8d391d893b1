#include "lyap/spectra.hpp"

#include "lyap/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lyap {

Rational RationalSpectrum::sum() const {
    Rational total;
    for (const Rational& v : values) total += v;
    return total;
}

std::string RationalSpectrum::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i].str();
    }
    return os.str();
}

RationalSpectrum hyperelliptic_w(const HyperellipticLocus& locus) {
    RationalSpectrum spectrum;
    spectrum.values.push_back(Rational(1));
    for (int d : locus.quadratic.orders) {
        if (d < 1)
            continue;
        for (int k = 1; 2 * k <= d + 1; ++k)
            spectrum.values.push_back(Rational(1) - Rational(2 * k, d + 2));
    }
    std::sort(spectrum.values.begin(), spectrum.values.end(), std::greater<Rational>());
    if (spectrum.values.size() != static_cast<std::size_t>(locus.cover_genus))
        throw Error(ErrorKind::LengthMismatch,
                    "spectrum length " + std::to_string(spectrum.values.size()) + " != genus " +
                        std::to_string(locus.cover_genus) + " for " + locus.quadratic.str());
    return spectrum;
}

Rational hyperelliptic_sum(const HyperellipticLocus& locus) {
    Rational total;
    for (int d : locus.quadratic.orders)
        if (((d % 2) + 2) % 2 == 1)
            total += Rational(1, d + 2); // poles (d = -1) contribute 1 each
    total /= Rational(4);

    Rational via_w = hyperelliptic_w(locus).sum();
    if (via_w != total)
        throw Error(ErrorKind::CrossCheckFailure,
                    "sum formula gives " + total.str() + " but w-spectrum sums to " + via_w.str() +
                        " for " + locus.quadratic.str());
    return total;
}

namespace {

TableRow row(std::vector<int> signature, Component component, std::vector<Rational> w,
             Rational sum, std::optional<std::vector<int>> quadratic = std::nullopt) {
    TableRow r;
    r.signature = std::move(signature);
    r.component = component;
    r.w = std::move(w);
    r.sum = sum;
    r.quadratic = std::move(quadratic);
    return r;
}

std::vector<int> q_sig(std::initializer_list<int> heads, int poles) {
    std::vector<int> sig(heads);
    sig.insert(sig.end(), poles, -1);
    return sig;
}

} // namespace

std::vector<TableRow> nonvarying_table(int genus) {
    using R = Rational;
    const auto U = Component::unspecified;
    switch (genus) {
    case 3: {
        std::vector<TableRow> rows = {
            row({4}, Component::hyp, {R(3, 5), R(1, 5)}, R(9, 5), q_sig({3}, 7)),
            row({4}, Component::odd, {R(2, 5), R(1, 5)}, R(8, 5)),
            row({3, 1}, U, {R(2, 4), R(1, 4)}, R(7, 4)),
            row({2, 2}, Component::hyp, {R(2, 3), R(1, 3)}, R(2), q_sig({4}, 8)),
            row({2, 2}, Component::odd, {R(1, 3), R(1, 3)}, R(5, 3)),
            row({2, 1, 1}, U, {R(1, 2), R(1, 3)}, R(11, 6)),
        };
        TableRow minimal = row({1, 1, 1, 1}, U, {}, R(2));
        minimal.sum_is_upper_bound_only = true;
        rows.push_back(std::move(minimal));
        return rows;
    }
    case 4:
        return {
            row({6}, Component::hyp, {R(5, 7), R(3, 7), R(1, 7)}, R(16, 7), q_sig({5}, 9)),
            row({6}, Component::even, {R(4, 7), R(2, 7), R(1, 7)}, R(14, 7)),
            row({6}, Component::odd, {R(3, 7), R(2, 7), R(1, 7)}, R(13, 7)),
            row({5, 1}, U, {R(1, 2), R(2, 6), R(1, 6)}, R(2)),
            row({3, 3}, Component::hyp, {R(3, 4), R(2, 4), R(1, 4)}, R(5, 2), q_sig({6}, 10)),
            row({3, 3}, Component::non_hyp, {R(2, 4), R(1, 4), R(1, 4)}, R(2)),
            row({4, 2}, Component::even, {R(3, 5), R(1, 3), R(1, 5)}, R(32, 15)),
            row({4, 2}, Component::odd, {R(2, 5), R(1, 3), R(1, 5)}, R(29, 15)),
            row({2, 2, 2}, U, {R(1, 3), R(1, 3), R(1, 3)}, R(2)),
            row({3, 2, 1}, U, {R(1, 2), R(1, 3), R(1, 4)}, R(25, 12)),
        };
    case 5:
        return {
            row({8}, Component::hyp, {R(7, 9), R(5, 9), R(3, 9), R(1, 9)}, R(25, 9), q_sig({7}, 11)),
            row({8}, Component::even, {R(5, 9), R(3, 9), R(2, 9), R(1, 9)}, R(20, 9)),
            row({8}, Component::odd, {R(4, 9), R(3, 9), R(2, 9), R(1, 9)}, R(19, 9)),
            row({5, 3}, U, {R(1, 2), R(1, 3), R(1, 4), R(1, 6)}, R(9, 4)),
            row({6, 2}, Component::odd, {R(3, 7), R(1, 3), R(2, 7), R(1, 7)}, R(46, 21)),
            row({4, 4}, Component::hyp, {R(4, 5), R(3, 5), R(2, 5), R(1, 5)}, R(3), q_sig({8}, 12)),
        };
    default:
        throw Error(ErrorKind::UnsupportedGenus,
                    "no table for genus " + std::to_string(genus) + " (supported: 3, 4, 5)");
    }
}

int cyclic_cover_genus(int N, const std::array<int, 4>& powers) {
    if (N < 1)
        throw Error(ErrorKind::ConstraintViolation, "N = " + std::to_string(N) + " < 1");
    long long sum = 0;
    int g = N;
    for (int a : powers) {
        if (a <= 0 || a > N)
            throw Error(ErrorKind::ConstraintViolation,
                        "power " + std::to_string(a) + " outside (0, N] with N = " + std::to_string(N));
        sum += a;
        g = std::gcd(g, a);
    }
    if (g != 1)
        throw Error(ErrorKind::ConstraintViolation,
                    "gcd(N, a_1..a_4) = " + std::to_string(g) + " != 1");
    if (sum % N != 0)
        throw Error(ErrorKind::ConstraintViolation,
                    "power sum " + std::to_string(sum) + " not divisible by N = " + std::to_string(N));

    int gcd_total = 0;
    for (int a : powers) gcd_total += std::gcd(a, N);
    if (gcd_total % 2 != 0)
        throw Error(ErrorKind::ConstraintViolation, "half-integral genus for the given powers");
    int genus = N + 1 - gcd_total / 2;
    if (genus < 0)
        throw Error(ErrorKind::ConstraintViolation, "negative genus for the given powers");
    return genus;
}

RationalSpectrum mn_spectrum(int N) {
    if (N % 2 != 0)
        throw Error(ErrorKind::OddN, "N = " + std::to_string(N) + " must be even");
    if (N < 4)
        throw Error(ErrorKind::ConstraintViolation, "N = " + std::to_string(N) + " < 4");

    RationalSpectrum spectrum;
    spectrum.values.push_back(Rational(1));
    for (int num = N - 2; num >= 2; num -= 2) {
        spectrum.values.push_back(Rational(num, N));
        spectrum.values.push_back(Rational(num, N));
    }

    int genus = cyclic_cover_genus(N, {N - 1, 1, N - 1, 1});
    if (spectrum.values.size() != static_cast<std::size_t>(genus))
        throw Error(ErrorKind::LengthMismatch,
                    "spectrum length " + std::to_string(spectrum.values.size()) + " != genus " +
                        std::to_string(genus));
    return spectrum;
}

RationalSpectrum stairs_spectrum(int N) {
    if (N < 3)
        throw Error(ErrorKind::ConstraintViolation, "N = " + std::to_string(N) + " < 3");
    RationalSpectrum spectrum;
    int first = (N % 2 == 1) ? 1 : 2;
    for (int num = N; num >= first; num -= 2)
        spectrum.values.push_back(Rational(num, N));
    return spectrum;
}

ReferenceSpecials reference_specials() {
    ReferenceSpecials refs;
    refs.windtree.values = {Rational(1), Rational(2, 3), Rational(2, 3), Rational(1, 3), Rational(1, 3)};
    refs.windtree_stratum = {2, 2, 2, 2};
    refs.prym_wd6_candidates = {Rational(4, 7), Rational(2, 7), Rational(1, 7)};
    refs.primitive_31.values = {Rational(1), Rational(2, 4), Rational(1, 4)};
    refs.primitive_31_stratum = {3, 1};
    return refs;
}

} // namespace lyap
