#include "lyap/quadratic.hpp"

#include "lyap/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lyap {

int QuadraticSignature::pole_count() const {
    return static_cast<int>(std::count(orders.begin(), orders.end(), -1));
}

int QuadraticSignature::odd_count() const {
    return static_cast<int>(std::count_if(orders.begin(), orders.end(),
                                          [](int d) { return ((d % 2) + 2) % 2 == 1; }));
}

std::string QuadraticSignature::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) os << ',';
        os << orders[i];
    }
    os << ')';
    return os.str();
}

QuadraticSignature make_quadratic(const std::vector<int>& orders) {
    if (orders.empty())
        throw Error(ErrorKind::EmptySignature, "a quadratic signature needs at least one entry");
    long long total = 0;
    for (int d : orders) {
        if (d == 0 || d < -1)
            throw Error(ErrorKind::InvalidOrder,
                        "singularity order " + std::to_string(d) + " (need >= -1 and != 0)");
        total += d;
    }
    if ((total % 4 + 4) % 4 != 0)
        throw Error(ErrorKind::NonIntegralGenus,
                    "order sum " + std::to_string(total) + " is not divisible by 4");
    if (total < -4)
        throw Error(ErrorKind::NegativeGenus, "order sum " + std::to_string(total) + " < -4");

    QuadraticSignature q;
    q.orders = orders;
    q.base_genus = static_cast<int>((total + 4) / 4);
    return q;
}

namespace {

struct RawZero {
    int order;
    ZeroSource source;
};

// Zeros of the cover in generation order (singularity index ascending,
// pair halves adjacent), before sorting into the canonical signature.
std::vector<RawZero> cover_zeros(const QuadraticSignature& q) {
    std::vector<RawZero> zeros;
    for (std::size_t i = 0; i < q.orders.size(); ++i) {
        int d = q.orders[i];
        int idx = static_cast<int>(i);
        if (d == -1)
            continue; // branch point, no zero
        if (d % 2 == 0) {
            zeros.push_back({d / 2, {ZeroSource::Kind::pair_first, idx}});
            zeros.push_back({d / 2, {ZeroSource::Kind::pair_second, idx}});
        } else {
            zeros.push_back({d + 1, {ZeroSource::Kind::single, idx}});
        }
    }
    return zeros;
}

} // namespace

InducedCover induced_abelian(const QuadraticSignature& q) {
    std::vector<RawZero> zeros = cover_zeros(q);
    if (zeros.empty())
        throw Error(ErrorKind::GenusTooSmall,
                    "the induced differential on the cover of " + q.str() + " has no zeros");
    std::stable_sort(zeros.begin(), zeros.end(),
                     [](const RawZero& a, const RawZero& b) { return a.order > b.order; });

    // Riemann-Hurwitz for the degree-2 cover: 2g' - 2 = 2(2q - 2) + B.
    int branch = q.odd_count();
    long long rh = 2LL * (2 * q.base_genus - 2) + branch;
    if (rh % 2 != 0)
        throw Error(ErrorKind::InconsistentCover, "odd ramification count for " + q.str());
    int cover_genus = static_cast<int>(rh / 2 + 1);

    long long zero_sum = 0;
    for (const auto& z : zeros) zero_sum += z.order;
    if (zero_sum != rh)
        throw Error(ErrorKind::InconsistentCover,
                    "zero orders sum to " + std::to_string(zero_sum) + " but 2g'-2 = " +
                        std::to_string(rh) + " for " + q.str());

    InducedCover cover;
    cover.cover_genus = cover_genus;
    std::vector<int> signature;
    for (const auto& z : zeros) {
        signature.push_back(z.order);
        cover.zero_sources.push_back(z.source);
    }
    cover.stratum = make_abelian_stratum(signature); // already descending; sort is stable here
    return cover;
}

HyperellipticLocus hyperelliptic_locus(const QuadraticSignature& q) {
    if (q.base_genus != 0)
        throw Error(ErrorKind::NotHyperelliptic,
                    "base genus " + std::to_string(q.base_genus) + " != 0 for " + q.str());

    InducedCover cover = induced_abelian(q);
    if (cover.cover_genus < 2)
        throw Error(ErrorKind::GenusTooSmall,
                    "cover genus " + std::to_string(cover.cover_genus) + " < 2 for " + q.str());

    HyperellipticLocus locus;
    locus.quadratic = q;
    locus.cover_genus = cover.cover_genus;
    locus.induced = std::move(cover.stratum);
    locus.zero_sources = std::move(cover.zero_sources);
    for (std::size_t i = 0; i < q.orders.size(); ++i) {
        int d = q.orders[i];
        if (d == -1)
            continue;
        LocusPoint p;
        p.is_weierstrass = (d % 2 == 1);
        p.order = p.is_weierstrass ? d + 1 : d / 2;
        p.singularity_index = static_cast<int>(i);
        locus.point_types.push_back(p);
    }
    return locus;
}

bool is_max_sum_locus(const QuadraticSignature& q) {
    if (q.base_genus != 0)
        throw Error(ErrorKind::NotHyperelliptic,
                    "base genus " + std::to_string(q.base_genus) + " != 0 for " + q.str());
    return std::all_of(q.orders.begin(), q.orders.end(),
                       [](int d) { return d == -1 || d % 2 == 0; });
}

} // namespace lyap
