#include "scalerep/crational.hpp"

namespace scalerep {

CRational operator/(const CRational& a, const CRational& b) {
    if (b.is_zero()) throw DivisionByZero("div");
    // a/b = a * conj(b) / |b|^2
    const Rational n = b.abs_squared();
    const CRational t = a * b.conj();
    return CRational(t.re() / n, t.im() / n);
}

CRational CRational::inv() const {
    if (is_zero()) throw DivisionByZero("inv");
    const Rational n = abs_squared();
    return CRational(re_ / n, -im_ / n);
}

CRational CRational::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    CRational base = *this;
    CRational acc = 1;
    std::uint64_t n = static_cast<std::uint64_t>(e);
    while (n != 0) {
        if (n & 1U) acc *= base;
        base *= base;
        n >>= 1U;
    }
    return acc;
}

std::string CRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    if (im_.is_negative()) return re_.str() + imag;  // sign carried by the numerator
    return re_.str() + "+" + imag;
}

namespace {

std::optional<CRational> parse_at(std::string_view text) {
    std::size_t pos = 0;
    auto first = detail::parse_rational_prefix(text, pos);
    if (!first) return std::nullopt;

    bool first_imag = pos < text.size() && text[pos] == 'i';
    if (first_imag) ++pos;

    if (pos == text.size()) {
        return first_imag ? CRational(Rational(0), *first) : CRational(*first);
    }
    if (first_imag) return std::nullopt;  // "2i+3" is not a literal

    if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
    auto second = detail::parse_rational_prefix(text, pos);
    if (!second) return std::nullopt;
    if (pos >= text.size() || text[pos] != 'i') return std::nullopt;
    ++pos;
    if (pos != text.size()) return std::nullopt;
    return CRational(*first, *second);
}

}  // namespace

CRational CRational::parse(std::string_view text) {
    auto z = parse_at(text);
    if (!z) throw ParseError(0, "complex literal 'a/b', 'c/di' or 'a/b+c/di'");
    return *z;
}

std::optional<CRational> CRational::try_parse(std::string_view text) { return parse_at(text); }

}  // namespace scalerep
