#include "lyap/rational.hpp"

#include "lyap/errors.hpp"

#include <cctype>
#include <ostream>

namespace lyap {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty())
        throw Error(ErrorKind::UsageError, "empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw Error(ErrorKind::UsageError, "sign without digits");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(ErrorKind::UsageError, "bad integer literal '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

} // namespace

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw Error(ErrorKind::UsageError, "zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den); // canonicalizes
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0)
        throw Error(ErrorKind::UsageError, "division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer())
        s += "/" + denominator().str();
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text), BigInt(1));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den <= 0)
        throw Error(ErrorKind::UsageError, "denominator must be positive in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace lyap
