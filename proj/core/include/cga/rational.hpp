#ifndef CGA_RATIONAL_HPP
#define CGA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cga {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator, so equal values have equal representations and the
/// textual form "p/q" (or "p" when q = 1) is canonical.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : value_(n) {}  // NOLINT: implicit int -> rational
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    /// Strict parser for the canonical textual format: "p" or "p/q" with
    /// q > 0 and gcd(|p|, q) = 1. Anything else throws std::invalid_argument
    /// with a hint naming the canonical spelling where one exists.
    static Rational parse(std::string_view text);

    std::string str() const;

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }
    int sign() const { return value_.sign(); }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    boost::multiprecision::cpp_rational value_;
};

/// n! as an exact integer-valued rational; n up to a few dozen stays cheap
/// but already overflows 64-bit machine integers past n = 20.
Rational factorial(long n);

}  // namespace cga

#endif
