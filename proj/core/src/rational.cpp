#include "cga/rational.hpp"

#include <ostream>

namespace cga {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("invalid rational \"" + std::string(whole) + "\": empty integer part");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("invalid rational \"" + std::string(whole) + "\": sign without digits");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("invalid rational \"" + std::string(whole) +
                                        "\": unexpected character '" + text[i] + "'");
        }
    }
    BigInt magnitude{std::string(text.substr(start))};
    return text[0] == '-' ? BigInt(-magnitude) : magnitude;
}

}  // namespace

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(BigInt num, BigInt den) {
    if (den.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    // division canonicalizes: reduces and moves the sign into the numerator
    value_ = boost::multiprecision::cpp_rational(num) / boost::multiprecision::cpp_rational(den);
}

Rational Rational::parse(std::string_view text) {
    const std::size_t slash = text.find('/');
    Rational canonical;
    if (slash == std::string_view::npos) {
        canonical = Rational(parse_integer(text, text), BigInt(1));
    } else {
        if (text.find('/', slash + 1) != std::string_view::npos) {
            throw std::invalid_argument("invalid rational \"" + std::string(text) + "\": multiple '/'");
        }
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den.is_zero()) {
            throw std::invalid_argument("invalid rational \"" + std::string(text) +
                                        "\": zero denominator");
        }
        canonical = Rational(std::move(num), std::move(den));
    }
    if (canonical.str() != text) {
        throw std::invalid_argument("rational \"" + std::string(text) +
                                    "\" is not in canonical form; write \"" + canonical.str() + "\"");
    }
    return canonical;
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
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
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(long n) {
    if (n < 0) {
        throw std::domain_error("factorial of negative argument");
    }
    BigInt acc(1);
    for (long t = 2; t <= n; ++t) {
        acc *= t;
    }
    return Rational(std::move(acc), BigInt(1));
}

}  // namespace cga
