#include "scalerep/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace scalerep {

namespace {
namespace mp = boost::multiprecision;
}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DivisionByZero("rational construction");
    normalize();
}

void Rational::normalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = mp::gcd(mp::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZero("div");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inv() const {
    if (num_ == 0) throw DivisionByZero("inv");
    return Rational(den_, num_);
}

Rational Rational::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Rational base = *this;
    Rational acc = 1;
    std::uint64_t n = static_cast<std::uint64_t>(e);
    while (n != 0) {
        if (n & 1U) acc *= base;
        base *= base;
        n >>= 1U;
    }
    return acc;
}

double Rational::to_double() const {
    if (num_ == 0) return 0.0;
    const bool neg = num_ < 0;
    BigInt a = mp::abs(num_);
    const BigInt& b = den_;

    // floor(log2(a/b)) lies in [e-1, e+1)
    const long e = static_cast<long>(mp::msb(a)) - static_cast<long>(mp::msb(b));
    if (e > 1090) throw Overflow("to_float: magnitude exceeds binary64 range");
    if (e < -1130) return neg ? -0.0 : 0.0;

    // Scale so the integer quotient carries 55-56 bits, then round to 53
    // with a sticky bit (round to nearest, ties to even).
    const long shift = 55 - e;
    BigInt n = a;
    BigInt d = b;
    if (shift >= 0)
        n <<= static_cast<unsigned>(shift);
    else
        d <<= static_cast<unsigned>(-shift);
    BigInt q, r;
    mp::divide_qr(n, d, q, r);

    std::uint64_t qi = q.convert_to<std::uint64_t>();
    bool sticky = (r != 0);
    int extra = 0;
    while ((qi >> 54U) != 0) {
        sticky |= (qi & 1U) != 0;
        qi >>= 1U;
        ++extra;
    }
    const bool round_bit = (qi & 1U) != 0;
    qi >>= 1U;
    ++extra;
    if (round_bit && (sticky || (qi & 1U) != 0)) ++qi;

    const double mag = std::ldexp(static_cast<double>(qi), static_cast<int>(extra - shift));
    if (std::isinf(mag)) throw Overflow("to_float: magnitude exceeds binary64 range");
    return neg ? -mag : mag;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

namespace detail {

// digits [ '/' digits ], with optional leading sign on the numerator
std::optional<Rational> parse_rational_prefix(std::string_view text, std::size_t& pos) {
    std::size_t i = pos;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return std::nullopt;
    BigInt num(std::string(text.substr(num_begin, i - num_begin)));
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) return std::nullopt;
        den = BigInt(std::string(text.substr(den_begin, i - den_begin)));
        if (den == 0) return std::nullopt;
    }
    pos = i;
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
}

}  // namespace detail

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto r = detail::parse_rational_prefix(text, pos);
    if (!r || pos != text.size()) throw ParseError(pos, "rational literal 'n' or 'n/d'");
    return *r;
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
    std::size_t pos = 0;
    auto r = detail::parse_rational_prefix(text, pos);
    if (!r || pos != text.size()) return std::nullopt;
    return r;
}

}  // namespace scalerep
