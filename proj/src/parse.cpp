#include "lyap/parse.hpp"

#include "lyap/errors.hpp"

#include <charconv>
#include <sstream>

namespace lyap {

namespace {

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(ErrorKind::UsageError,
                    "bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

std::pair<std::vector<int>, Component> parse_abelian_signature(std::string_view text) {
    Component component = Component::unspecified;
    auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        std::string_view label = text.substr(colon + 1);
        if (label == "hyp") component = Component::hyp;
        else if (label == "odd") component = Component::odd;
        else if (label == "even") component = Component::even;
        else if (label == "non-hyp") component = Component::non_hyp;
        else if (label == "unspecified") component = Component::unspecified;
        else
            throw Error(ErrorKind::UsageError, "unknown component label '" + std::string(label) + "'");
        text = text.substr(0, colon);
    }
    if (text.empty())
        throw Error(ErrorKind::UsageError, "empty signature");

    std::vector<int> orders;
    for (std::string_view part : split(text, ','))
        orders.push_back(parse_int(part, "zero order"));
    return {orders, component};
}

std::vector<int> parse_quadratic_signature(std::string_view text) {
    if (text.empty())
        throw Error(ErrorKind::UsageError, "empty signature");
    std::vector<int> orders;
    for (std::string_view part : split(text, ',')) {
        int repeat = 1;
        auto x = part.find('x');
        if (x != std::string_view::npos) {
            repeat = parse_int(part.substr(x + 1), "repetition count");
            if (repeat < 1)
                throw Error(ErrorKind::UsageError,
                            "repetition count must be positive in '" + std::string(part) + "'");
            part = part.substr(0, x);
        }
        int order = parse_int(part, "singularity order");
        orders.insert(orders.end(), repeat, order);
    }
    return orders;
}

std::string render_abelian_signature(const std::vector<int>& signature, Component component) {
    std::ostringstream os;
    for (std::size_t i = 0; i < signature.size(); ++i) {
        if (i) os << ',';
        os << signature[i];
    }
    if (component != Component::unspecified)
        os << ':' << component_name(component);
    return os.str();
}

std::string render_quadratic_signature(const std::vector<int>& orders) {
    // Run-length encode repeats of three or more, matching the "x" shorthand.
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < orders.size()) {
        std::size_t j = i;
        while (j < orders.size() && orders[j] == orders[i]) ++j;
        std::size_t run = j - i;
        if (!first) os << ',';
        if (run >= 3)
            os << orders[i] << 'x' << run;
        else
            for (std::size_t r = 0; r < run; ++r) {
                if (r) os << ',';
                os << orders[i];
            }
        first = false;
        i = j;
    }
    return os.str();
}

} // namespace lyap
