#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "scalerep/error.hpp"

namespace scalerep {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Invariants (enforced on every constructor path):
///   - denominator > 0 (sign lives in the numerator)
///   - gcd(|numerator|, denominator) == 1
///   - zero is stored as 0/1
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws DivisionByZero

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return is_negative() ? -*this : *this; }
    Rational inv() const;  // throws DivisionByZero on zero

    /// Exact integer power, exponent may be negative (throws DivisionByZero on 0^-n).
    Rational pow(std::int64_t e) const;

    /// Nearest binary64 (round to nearest, ties to even); relative error of the
    /// conversion is at most 2^-52. Throws Overflow when the magnitude exceeds
    /// the binary64 range.
    double to_double() const;

    /// Renders "n/d", with "/d" omitted when d == 1. Round-trips through parse().
    std::string str() const;

    static Rational parse(std::string_view text);  // throws ParseError
    static std::optional<Rational> try_parse(std::string_view text);

  private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

namespace detail {
/// Consumes a rational literal ("[sign]digits[/digits]") starting at pos,
/// advancing pos past it; nullopt (pos untouched) when none is present.
std::optional<Rational> parse_rational_prefix(std::string_view text, std::size_t& pos);
}  // namespace detail

}  // namespace scalerep
