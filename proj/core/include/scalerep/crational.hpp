#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "scalerep/rational.hpp"

namespace scalerep {

/// Gaussian rational: a complex value with exact rational components.
class CRational {
  public:
    CRational() = default;
    CRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design
    CRational(long long re) : re_(re) {}            // NOLINT: implicit by design
    CRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static CRational i() { return CRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    /// True for values that are integers with zero imaginary part.
    bool is_integer() const { return is_real() && re_.is_integer(); }

    CRational operator-() const { return CRational(-re_, -im_); }
    friend CRational operator+(const CRational& a, const CRational& b) {
        return CRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend CRational operator-(const CRational& a, const CRational& b) {
        return CRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return CRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend CRational operator/(const CRational& a, const CRational& b);  // throws DivisionByZero

    CRational& operator+=(const CRational& r) { return *this = *this + r; }
    CRational& operator-=(const CRational& r) { return *this = *this - r; }
    CRational& operator*=(const CRational& r) { return *this = *this * r; }
    CRational& operator/=(const CRational& r) { return *this = *this / r; }

    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    CRational conj() const { return CRational(re_, -im_); }
    Rational abs_squared() const { return re_ * re_ + im_ * im_; }
    CRational inv() const;  // throws DivisionByZero on zero
    CRational pow(std::int64_t e) const;

    std::pair<double, double> to_doubles() const {
        return {re_.to_double(), im_.to_double()};
    }

    /// Renders real values as "n/d", pure-imaginary as "n/di", and general
    /// values as "a/b+c/di" (or with '-'). Round-trips through parse().
    std::string str() const;

    static CRational parse(std::string_view text);  // throws ParseError
    static std::optional<CRational> try_parse(std::string_view text);

  private:
    Rational re_;
    Rational im_;
};

inline CRational conj(const CRational& z) { return z.conj(); }

}  // namespace scalerep
