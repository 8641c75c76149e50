#include <doctest.h>

#include <cmath>

#include "scalerep/sampling.hpp"
#include "scalerep/structure.hpp"
#include "scalerep/view.hpp"

using namespace scalerep;

namespace {
const CRational half{Rational(BigInt(1), BigInt(2))};
const CRational three_halves{Rational(BigInt(3), BigInt(2))};
}  // namespace

TEST_CASE("make_structure validates the scale domain") {
    CHECK(make_structure(NumberType::Rational, three_halves).scale() == three_halves);
    CHECK_THROWS_AS(make_structure(NumberType::Natural, CRational(0)), InvalidScale);
    CHECK_THROWS_AS(make_structure(NumberType::Natural, CRational(-2)), InvalidScale);
    CHECK_THROWS_AS(make_structure(NumberType::Natural, half), InvalidScale);
    CHECK_THROWS_AS(make_structure(NumberType::Rational, CRational(Rational(2), Rational(1))),
                    InvalidScale);
    CHECK_THROWS_AS(make_structure(NumberType::Integer, half), InvalidScale);
    CHECK_THROWS_AS(make_structure(NumberType::Complex, CRational(0)), InvalidScale);
    CHECK(make_structure(NumberType::Integer, CRational(-3)).order_reversed());
}

TEST_CASE("structure literals round trip") {
    for (const char* lit : {"nat:n=3", "int:j=-1", "rat:r=3/2", "real:r=-2/5", "cpx:c=2+1i",
                            "cpx:c=1i", "cpx:c=-1"}) {
        CHECK(StructureHandle::from_literal(lit).literal() == lit);
    }
    CHECK_THROWS_AS(StructureHandle::from_literal("foo:r=1"), ParseError);
    CHECK_THROWS_AS(StructureHandle::from_literal("rat:x=1"), ParseError);
    CHECK_THROWS_AS(StructureHandle::from_literal("rat:r=0"), InvalidScale);
    CHECK_THROWS_AS(StructureHandle::from_literal("nat:n=1/2"), InvalidScale);
}

TEST_CASE("correspondent is scale times internal") {
    Sampler smp(2);
    for (int i = 0; i < 200; ++i) {
        const CRational p = smp.nonzero_gaussian();
        const StructureHandle s = make_structure(NumberType::Complex, p);
        CHECK(same_value(CRational(1), s).correspondent().value == p);
        CHECK(same_value(CRational(0), s).correspondent().value == CRational(0));
    }
    const StructureHandle s3 = make_structure(NumberType::Natural, CRational(3));
    CHECK(same_value(CRational(10), s3).correspondent().value == CRational(30));
}

TEST_CASE("sameness and correspondence split unless the scale is 1") {
    const StructureHandle base = make_structure(NumberType::Rational, CRational(1));
    Sampler smp(4);
    for (int i = 0; i < 200; ++i) {
        const CRational a{smp.rational()};
        CHECK(same_value(a, base).correspondent().value == a);
    }
    const StructureHandle s = make_structure(NumberType::Rational, three_halves);
    const ScaledValue seven = same_value(CRational(7), s);
    CHECK(seven.internal() == CRational(7));
    CHECK(seven.correspondent().value == CRational(Rational(BigInt(21), BigInt(2))));
    for (int n = 1; n <= 6; ++n) {
        const StructureHandle nat = make_structure(NumberType::Natural, CRational(n));
        CHECK(same_value(CRational(1), nat).correspondent().value == CRational(n));
    }
}

TEST_CASE("same_value rejects values outside the type") {
    const StructureHandle nat = make_structure(NumberType::Natural, CRational(3));
    CHECK_THROWS_AS(same_value(half, nat), DomainError);
    CHECK_THROWS_AS(same_value(CRational(-1), nat), DomainError);
    const StructureHandle integers = make_structure(NumberType::Integer, CRational(2));
    CHECK_THROWS_AS(same_value(half, integers), DomainError);
    const StructureHandle rats = make_structure(NumberType::Rational, CRational(2));
    CHECK_THROWS_AS(same_value(CRational::i(), rats), DomainError);
}

TEST_CASE("base-set membership for natural and integer structures") {
    const StructureHandle n3 = make_structure(NumberType::Natural, CRational(3));
    CHECK(member_of_base_set(BaseElement{CRational(6)}, n3));
    CHECK(!member_of_base_set(BaseElement{CRational(7)}, n3));
    CHECK(!member_of_base_set(BaseElement{CRational(-3)}, n3));
    const StructureHandle jm2 = make_structure(NumberType::Integer, CRational(-2));
    CHECK(member_of_base_set(BaseElement{CRational(-4)}, jm2));
    CHECK(member_of_base_set(BaseElement{CRational(6)}, jm2));
    CHECK(!member_of_base_set(BaseElement{CRational(3)}, jm2));
    const StructureHandle r = make_structure(NumberType::Rational, three_halves);
    Sampler smp(6);
    for (int i = 0; i < 100; ++i)
        CHECK(member_of_base_set(BaseElement{CRational(smp.rational())}, r));
}

TEST_CASE("view_value inverts the valuation") {
    for (std::int64_t n = 1; n <= 5; ++n) {
        const StructureHandle s = make_structure(NumberType::Natural, CRational(n));
        for (std::int64_t a = 0; a <= 10; ++a) {
            CHECK(view_value(BaseElement{CRational(n * a)}, s).internal() == CRational(a));
        }
        for (std::int64_t l = 1; l < n; ++l) {
            CHECK_THROWS_AS(view_value(BaseElement{CRational(n * 4 + l)}, s), NotInBaseSet);
        }
        CHECK(view_value(BaseElement{CRational(0)}, s).internal() == CRational(0));
    }
}

TEST_CASE("scaled addition and subtraction") {
    const StructureHandle s = make_structure(NumberType::Rational, three_halves);
    const ScaledValue two = same_value(CRational(2), s);
    const ScaledValue three = same_value(CRational(3), s);
    const ScaledValue sum = add_scaled(two, three);
    CHECK(sum.internal() == CRational(5));
    CHECK(sum.correspondent().value == three_halves * CRational(5));
    CHECK(add_scaled(two, same_value(CRational(0), s)) == two);

    const StructureHandle other = make_structure(NumberType::Rational, CRational(2));
    CHECK_THROWS_AS(add_scaled(two, same_value(CRational(1), other)), StructureMismatch);

    const StructureHandle nat = make_structure(NumberType::Natural, CRational(2));
    CHECK(sub_scaled(same_value(CRational(5), nat), same_value(CRational(3), nat)).internal() ==
          CRational(2));
    CHECK_THROWS_AS(sub_scaled(same_value(CRational(3), nat), same_value(CRational(5), nat)),
                    DomainError);
}

TEST_CASE("scaled multiplication matches the compensated external formula") {
    const StructureHandle s3 = make_structure(NumberType::Natural, CRational(3));
    const ScaledValue a = same_value(CRational(2), s3);
    const ScaledValue b = same_value(CRational(5), s3);
    const ScaledValue prod = mul_scaled(a, b);
    CHECK(prod.internal() == CRational(10));
    CHECK(prod.correspondent().value == CRational(30));
    // external route: (3*2)(3*5)/3
    const ExternalView ext = ExternalView::of(s3);
    CHECK(ext.mul(ext.inject(CRational(2)), ext.inject(CRational(5))) == CRational(30));

    // n acts as the multiplicative identity seen externally
    for (std::int64_t n = 1; n <= 4; ++n) {
        const StructureHandle s = make_structure(NumberType::Natural, CRational(n));
        const ExternalView v = ExternalView::of(s);
        const CRational na = v.inject(CRational(7));
        CHECK(v.mul(na, v.one()) == na);
    }
    CHECK(mul_scaled(a, same_value(CRational(0), s3)).internal() == CRational(0));
}

TEST_CASE("scaled division") {
    const StructureHandle s2 = make_structure(NumberType::Rational, CRational(2));
    const ScaledValue six = same_value(CRational(6), s2);
    const ScaledValue three = same_value(CRational(3), s2);
    const ScaledValue q = div_scaled(six, three);
    CHECK(q.internal() == CRational(2));
    // external identity: p * (corr(a) / corr(b)) = 2 * (12/6) = 4
    CHECK(q.correspondent().value == CRational(4));
    CHECK(div_scaled(six, six).internal() == CRational(1));
    CHECK(div_scaled(six, six).correspondent().value == CRational(2));
    CHECK_THROWS_AS(div_scaled(six, same_value(CRational(0), s2)), DivisionByZero);

    const StructureHandle nat = make_structure(NumberType::Natural, CRational(2));
    CHECK_THROWS_AS(
        div_scaled(same_value(CRational(6), nat), same_value(CRational(3), nat)),
        UnsupportedOperation);
    const StructureHandle ints = make_structure(NumberType::Integer, CRational(2));
    CHECK_THROWS_AS(
        div_scaled(same_value(CRational(6), ints), same_value(CRational(3), ints)),
        UnsupportedOperation);
}

TEST_CASE("scaled order: reflection reverses the external relation only") {
    const StructureHandle refl = make_structure(NumberType::Integer, CRational(-1));
    const ScaledValue zero = same_value(CRational(0), refl);
    const ScaledValue one = same_value(CRational(1), refl);
    CHECK(lt_scaled(zero, one));  // 0 <_{-1} 1_{-1}
    // externally the correspondents satisfy 0 > -1
    CHECK(zero.correspondent().value == CRational(0));
    CHECK(one.correspondent().value == CRational(-1));
    const ExternalView ext = ExternalView::of(refl);
    CHECK(ext.less(zero.correspondent().value, one.correspondent().value));

    for (std::int64_t n = 1; n <= 5; ++n) {
        const StructureHandle s = make_structure(NumberType::Natural, CRational(n));
        CHECK(lt_scaled(same_value(CRational(0), s), same_value(CRational(1), s)));
        CHECK(lt_scaled(same_value(CRational(1), s), same_value(CRational(2), s)));
    }

    // transitivity at j = -1 on random triples
    Sampler smp(8);
    for (int i = 0; i < 300; ++i) {
        const CRational a = smp.value_for(NumberType::Integer);
        const CRational b = smp.value_for(NumberType::Integer);
        const CRational c = smp.value_for(NumberType::Integer);
        const ScaledValue av = same_value(a, refl), bv = same_value(b, refl),
                          cv = same_value(c, refl);
        if (lt_scaled(av, bv) && lt_scaled(bv, cv)) CHECK(lt_scaled(av, cv));
    }

    const StructureHandle cpx = make_structure(NumberType::Complex, CRational::i());
    CHECK_THROWS_AS(lt_scaled(same_value(CRational(0), cpx), same_value(CRational(1), cpx)),
                    UnsupportedOperation);
}

TEST_CASE("scaled conjugation corresponds to c * conj(a)") {
    Sampler smp(10);
    for (int i = 0; i < 300; ++i) {
        const CRational c = smp.nonzero_gaussian();
        const StructureHandle s = make_structure(NumberType::Complex, c);
        const CRational a = smp.gaussian();
        const ScaledValue av = same_value(a, s);
        CHECK(conj_scaled(av).correspondent().value == c * a.conj());
        CHECK(conj_scaled(conj_scaled(av)) == av);
    }
    const StructureHandle s = make_structure(NumberType::Complex, CRational(Rational(2), Rational(1)));
    // the identity stays real
    CHECK(conj_scaled(same_value(CRational(1), s)) == same_value(CRational(1), s));
    // powers of the scale: (c^n)_c conjugates to c * conj(c^n)
    const CRational c = s.scale();
    for (int n = 1; n <= 4; ++n) {
        const CRational cn = c.pow(n);
        CHECK(conj_scaled(same_value(cn, s)).correspondent().value == c * cn.conj());
    }
    const StructureHandle rat = make_structure(NumberType::Rational, CRational(2));
    CHECK_THROWS_AS(conj_scaled(same_value(CRational(1), rat)), UnsupportedOperation);
}

TEST_CASE("conjugation phase form agrees with the exact correspondent") {
    Sampler smp(12);
    int tested = 0;
    for (int i = 0; tested < 300 && i < 2000; ++i) {
        const CRational c = smp.nonzero_gaussian(6);
        const CRational a = smp.nonzero_gaussian(6);
        const StructureHandle s = make_structure(NumberType::Complex, c);
        const auto [pre, pim] = conj_phase_form(same_value(a, s));
        const auto [ere, eim] = (c * a.conj()).to_doubles();
        const double scale = std::hypot(ere, eim);
        REQUIRE(scale > 0.0);
        CHECK(std::hypot(pre - ere, pim - eim) / scale < 1e-9);
        ++tested;
    }
    // phase zero collapses to plain conjugation
    const StructureHandle s1 = make_structure(NumberType::Complex, CRational(1));
    const auto [re, im] = conj_phase_form(same_value(CRational(Rational(3), Rational(4)), s1));
    CHECK(re == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(im == doctest::Approx(-4.0).epsilon(1e-12));
    // c = i: e^{i pi} conj(i) conj(a) = i * conj(a) = c * conj(a)
    const StructureHandle si = make_structure(NumberType::Complex, CRational::i());
    const CRational a(Rational(2), Rational(-1));
    const auto [re2, im2] = conj_phase_form(same_value(a, si));
    const auto [xre, xim] = (CRational::i() * a.conj()).to_doubles();
    CHECK(re2 == doctest::Approx(xre).epsilon(1e-9));
    CHECK(im2 == doctest::Approx(xim).epsilon(1e-9));
}

TEST_CASE("isomorphism maps between the representations") {
    Sampler smp(14);
    for (int i = 0; i < 200; ++i) {
        const CRational p = smp.nonzero_gaussian();
        const StructureHandle s = make_structure(NumberType::Complex, p);
        CHECK(map_up(CRational(1), p) == p);
        const CRational a = smp.gaussian(), b = smp.gaussian();
        // W^p(a*b) evaluated externally equals p*(a*b)
        const ExternalView v = ExternalView::of(s);
        CHECK(v.mul(map_up(a, p), map_up(b, p)) == p * (a * b));
        CHECK(map_up(a, CRational(1)) == a);
        CHECK(map_down(p, s).internal() == CRational(1));
        CHECK(map_composite(a, s) == same_value(a, s));
    }
    // two steps with q inside the p-scaled structure collapse to qp
    const CRational p(Rational(2)), q(Rational(5));
    const StructureHandle sp = make_structure(NumberType::Rational, p);
    const ScaledValue qp = mul_scaled(same_value(q, sp), same_value(CRational(3), sp));
    CHECK(qp.correspondent().value == p * q * CRational(3));
}

TEST_CASE("composition of scaling steps") {
    const StructureHandle s = make_structure(NumberType::Rational, three_halves);
    const CRational q{Rational(BigInt(2), BigInt(3))};
    CHECK(compose_scaling(s, q).is_base());
    CHECK(compose_scaling(s, CRational(1)) == s);
    const StructureHandle a = make_structure(NumberType::Rational, CRational(2));
    const StructureHandle b = make_structure(NumberType::Rational, CRational(5));
    CHECK(compose_scaling(a, b.scale()) == compose_scaling(b, a.scale()));
    CHECK(compose_scaling(a, b.scale()).scale() == CRational(10));
    CHECK_THROWS_AS(compose_scaling(a, CRational(0)), InvalidScale);
    const StructureHandle nat = make_structure(NumberType::Natural, CRational(2));
    CHECK_THROWS_AS(compose_scaling(nat, half), InvalidScale);
}

TEST_CASE("structure group laws") {
    Sampler smp(16);
    for (int i = 0; i < 300; ++i) {
        const CRational a = smp.nonzero_gaussian(), b = smp.nonzero_gaussian(),
                        c = smp.nonzero_gaussian();
        const StructureHandle sa = make_structure(NumberType::Complex, a);
        const StructureHandle sb = make_structure(NumberType::Complex, b);
        const StructureHandle sc = make_structure(NumberType::Complex, c);
        CHECK(group_op(group_op(sa, sb), sc) == group_op(sa, group_op(sb, sc)));
        CHECK(group_op(sa, group_inv(sa)).is_base());
        CHECK(group_op(sa, make_structure(NumberType::Complex, CRational(1))) == sa);
    }
    const StructureHandle rat = make_structure(NumberType::Rational, CRational(2));
    const StructureHandle cpx = make_structure(NumberType::Complex, CRational(2));
    CHECK_THROWS_AS(group_op(rat, cpx), TypeMismatch);
    const StructureHandle nat = make_structure(NumberType::Natural, CRational(2));
    CHECK_THROWS_AS(group_inv(nat), UnsupportedOperation);
}

TEST_CASE("correspondents obey the compensated external formulas") {
    Sampler smp(20);
    for (int i = 0; i < 500; ++i) {
        const CRational p = smp.nonzero_gaussian();
        const StructureHandle s = make_structure(NumberType::Complex, p);
        const CRational a = smp.gaussian(), b = smp.gaussian();
        const ScaledValue av = same_value(a, s), bv = same_value(b, s);
        const CRational ca = av.correspondent().value, cb = bv.correspondent().value;
        CHECK(add_scaled(av, bv).correspondent().value == ca + cb);
        CHECK(sub_scaled(av, bv).correspondent().value == ca - cb);
        CHECK(mul_scaled(av, bv).correspondent().value == ca * cb / p);
        if (!b.is_zero())
            CHECK(div_scaled(av, bv).correspondent().value == p * (ca / cb));
        // sameness and correspondence differ away from the base structure
        if (!a.is_zero() && !(p == CRational(1)))
            CHECK(av.correspondent().value != a);
    }
}

TEST_CASE("wyz structures") {
    CHECK_THROWS_AS(make_wyz_structure(CRational(0), CRational(1), CRational(1)), InvalidScale);

    // w = y = z = p behaves exactly like the scaled view
    Sampler smp(18);
    const CRational p{Rational(BigInt(7), BigInt(2))};
    const ExternalView wyz =
        ExternalView::wyz(make_wyz_structure(p, p, p));
    const ExternalView scaled =
        ExternalView::of(make_structure(NumberType::Rational, p));
    for (int i = 0; i < 200; ++i) {
        const CRational a{smp.rational()}, b{smp.nonzero_rational()};
        CHECK(wyz.inject(a) == scaled.inject(a));
        CHECK(wyz.mul(wyz.inject(a), wyz.inject(b)) == scaled.mul(scaled.inject(a), scaled.inject(b)));
        CHECK(wyz.div(wyz.inject(a), wyz.inject(b)) == scaled.div(scaled.inject(a), scaled.inject(b)));
        CHECK(wyz.one() == scaled.one());
    }

    // w=2, y=3, z=5: x*y on x=y=1 externally gives 25/2, not 5
    const ExternalView bad = ExternalView::wyz(
        make_wyz_structure(CRational(2), CRational(3), CRational(5)));
    const CRational got = bad.mul(bad.inject(CRational(1)), bad.inject(CRational(1)));
    CHECK(got == CRational(Rational(BigInt(25), BigInt(2))));
    CHECK(got != CRational(5));
}
