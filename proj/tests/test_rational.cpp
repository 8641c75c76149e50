#include <doctest.h>

#include "scalerep/crational.hpp"
#include "scalerep/sampling.hpp"

using namespace scalerep;

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(BigInt(1), BigInt(2)) + Rational(BigInt(1), BigInt(3)) ==
          Rational(BigInt(5), BigInt(6)));
    CHECK(Rational(BigInt(3), BigInt(4)) / Rational(BigInt(3), BigInt(4)) == Rational(1));
    CHECK(Rational(2) - Rational(5) == Rational(-3));
    CHECK(-Rational(BigInt(1), BigInt(2)) == Rational(BigInt(-1), BigInt(2)));
}

TEST_CASE("rational storage is always reduced with positive denominator") {
    const Rational a(BigInt(2), BigInt(-4));
    CHECK(a.num() == -1);
    CHECK(a.den() == 2);
    const Rational b(BigInt(0), BigInt(-7));
    CHECK(b.num() == 0);
    CHECK(b.den() == 1);
    const Rational c(BigInt(36), BigInt(24));
    CHECK(c.num() == 3);
    CHECK(c.den() == 2);

    Sampler s(11);
    for (int i = 0; i < 1000; ++i) {
        const Rational r = s.rational() + s.rational() * s.rational();
        CHECK(r.den() > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.num()), r.den()) == 1);
    }
}

TEST_CASE("rational division by zero") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
    try {
        Rational(1) / Rational(0);
    } catch (const DivisionByZero& e) {
        CHECK(e.op == "div");
    }
}

TEST_CASE("rational field laws hold exactly on random samples") {
    Sampler s(23);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = s.rational(), b = s.rational(), c = s.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Rational(1) == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rational order is total and compatible") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(-1) < Rational(0));
    Sampler s(5);
    for (int i = 0; i < 300; ++i) {
        const Rational a = s.rational(), b = s.rational();
        const bool lt = a < b, eq = a == b, gt = b < a;
        CHECK(int(lt) + int(eq) + int(gt) == 1);
    }
}

TEST_CASE("rational to_double") {
    CHECK(Rational(BigInt(1), BigInt(2)).to_double() == 0.5);
    CHECK(Rational(BigInt(1), BigInt(3)).to_double() == 1.0 / 3.0);
    CHECK(Rational(BigInt(-7), BigInt(8)).to_double() == -0.875);
    CHECK(Rational(0).to_double() == 0.0);

    // 10^400 overflows binary64
    BigInt big = 1;
    for (int i = 0; i < 400; ++i) big *= 10;
    CHECK_THROWS_AS(Rational(big).to_double(), Overflow);
    CHECK(Rational(BigInt(1), big).to_double() == 0.0);  // underflow is not an error

    // both operands exactly representable: result must match the correctly
    // rounded IEEE division
    Sampler s(7);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t n = s.int_in(-(1LL << 40), 1LL << 40);
        const std::int64_t d = s.int_in(1, 1LL << 40);
        CHECK(Rational(BigInt(n), BigInt(d)).to_double() ==
              static_cast<double>(n) / static_cast<double>(d));
    }
}

TEST_CASE("rational pow") {
    const Rational a(BigInt(2), BigInt(3));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(0) == Rational(1));
    CHECK(a.pow(-2) == (a * a).inv());
    CHECK_THROWS_AS(Rational(0).pow(-1), DivisionByZero);
}

TEST_CASE("rational text round trip") {
    CHECK(Rational(BigInt(5), BigInt(6)).str() == "5/6");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational::parse("5/6") == Rational(BigInt(5), BigInt(6)));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2 "), ParseError);

    Sampler s(31);
    for (int i = 0; i < 500; ++i) {
        const Rational r = s.rational(1000);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("complex rational basics") {
    const CRational i = CRational::i();
    CHECK(i * i == CRational(-1));
    CHECK(CRational(Rational(2), Rational(1)).inv() ==
          CRational(Rational(BigInt(2), BigInt(5)), Rational(BigInt(-1), BigInt(5))));

    Sampler s(17);
    for (int k = 0; k < 1000; ++k) {
        const CRational z = s.gaussian(), w = s.gaussian(), u = s.gaussian();
        CHECK(z.conj().conj() == z);
        CHECK((z * w).abs_squared() == z.abs_squared() * w.abs_squared());
        if (!z.is_zero()) CHECK(z.inv() * z == CRational(1));
        CHECK((z + w) + u == z + (w + u));
        CHECK(z + w == w + z);
        CHECK((z * w) * u == z * (w * u));
        CHECK(z * w == w * z);
        CHECK(z * (w + u) == z * w + z * u);
        CHECK(z * CRational(1) == z);
    }
}

TEST_CASE("complex rational abs_squared is positive definite") {
    Sampler s(19);
    for (int k = 0; k < 300; ++k) {
        const CRational z = s.gaussian();
        const Rational n = z.abs_squared();
        CHECK(!n.is_negative());
        CHECK((n.is_zero() == z.is_zero()));
    }
}

TEST_CASE("complex rational division") {
    CHECK_THROWS_AS(CRational(1) / CRational(0), DivisionByZero);
    Sampler s(3);
    for (int k = 0; k < 300; ++k) {
        const CRational z = s.gaussian();
        const CRational w = s.nonzero_gaussian();
        CHECK((z / w) * w == z);
    }
}

TEST_CASE("complex rational text round trip") {
    CHECK(CRational(Rational(2), Rational(1)).str() == "2+1i");
    CHECK(CRational(Rational(BigInt(-1), BigInt(2)), Rational(BigInt(-3), BigInt(4))).str() ==
          "-1/2-3/4i");
    CHECK(CRational(Rational(0), Rational(1)).str() == "1i");
    CHECK(CRational(0).str() == "0");
    CHECK(CRational::parse("2+1i") == CRational(Rational(2), Rational(1)));
    CHECK(CRational::parse("1i") == CRational::i());
    CHECK(CRational::parse("-2/5") == CRational(Rational(BigInt(-2), BigInt(5))));
    CHECK_THROWS_AS(CRational::parse("2i+3"), ParseError);
    CHECK_THROWS_AS(CRational::parse("i"), ParseError);

    Sampler s(41);
    for (int k = 0; k < 500; ++k) {
        const CRational z = s.gaussian(50);
        CHECK(CRational::parse(z.str()) == z);
    }
}
