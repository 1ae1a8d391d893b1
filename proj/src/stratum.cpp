#include "lyap/stratum.hpp"

#include "lyap/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lyap {

const char* component_name(Component c) {
    switch (c) {
    case Component::unspecified: return "unspecified";
    case Component::hyp: return "hyp";
    case Component::odd: return "odd";
    case Component::even: return "even";
    case Component::non_hyp: return "non-hyp";
    }
    return "unspecified";
}

bool AbelianStratum::is_minimal_signature() const {
    return std::all_of(signature.begin(), signature.end(), [](int m) { return m == 1; });
}

std::string AbelianStratum::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < signature.size(); ++i) {
        if (i) os << ',';
        os << signature[i];
    }
    os << ')';
    return os.str();
}

AbelianStratum make_abelian_stratum(const std::vector<int>& signature, Component component) {
    if (signature.empty())
        throw Error(ErrorKind::EmptySignature, "a stratum needs at least one zero");
    long long total = 0;
    for (int m : signature) {
        if (m < 1)
            throw Error(ErrorKind::InvalidOrder, "zero order " + std::to_string(m) + " < 1");
        total += m;
    }
    if (total % 2 != 0)
        throw Error(ErrorKind::NonIntegralGenus,
                    "order sum " + std::to_string(total) + " is odd, (sum+2)/2 is not an integer");

    AbelianStratum s;
    s.original_order = signature;
    s.signature = signature;
    std::sort(s.signature.begin(), s.signature.end(), std::greater<int>());
    s.component = component;
    s.genus = static_cast<int>((total + 2) / 2);
    return s;
}

std::vector<Rational> SlopeSequence::values() const {
    std::vector<Rational> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.value);
    return v;
}

Rational SlopeSequence::sum() const {
    Rational total;
    for (const auto& e : entries) total += e.value;
    return total;
}

SlopeSequence slope_sequence(const AbelianStratum& s) {
    SlopeSequence seq;
    seq.entries.reserve(2 * s.genus - 2);
    for (std::size_t i = 0; i < s.signature.size(); ++i) {
        int m = s.signature[i];
        for (int j = 1; j <= m; ++j)
            seq.entries.push_back({Rational(-j, m + 1), static_cast<int>(i), j});
    }
    std::sort(seq.entries.begin(), seq.entries.end(), [](const SlopeEntry& a, const SlopeEntry& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.zero_index != b.zero_index) return a.zero_index < b.zero_index;
        return a.mult_index < b.mult_index;
    });
    return seq;
}

Rational kappa_mu(const AbelianStratum& s) {
    Rational total;
    for (int m : s.signature)
        total += Rational(static_cast<long long>(m) * (m + 2), m + 1);
    return total / Rational(12);
}

} // namespace lyap
