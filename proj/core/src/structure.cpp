#include "scalerep/structure.hpp"

#include <cmath>
#include <complex>

namespace scalerep {

std::string_view to_string(NumberType t) {
    switch (t) {
        case NumberType::Natural: return "nat";
        case NumberType::Integer: return "int";
        case NumberType::Rational: return "rat";
        case NumberType::Real: return "real";
        case NumberType::Complex: return "cpx";
    }
    return "?";
}

namespace {

char scale_key(NumberType t) {
    switch (t) {
        case NumberType::Natural: return 'n';
        case NumberType::Integer: return 'j';
        case NumberType::Rational:
        case NumberType::Real: return 'r';
        case NumberType::Complex: return 'c';
    }
    return '?';
}

void check_scale(NumberType t, const CRational& scale) {
    if (scale.is_zero()) throw InvalidScale("scale must be nonzero");
    switch (t) {
        case NumberType::Natural:
            if (!scale.is_integer() || !scale.re().is_positive())
                throw InvalidScale("natural structures need a positive integer scale, got " +
                                   scale.str());
            break;
        case NumberType::Integer:
            if (!scale.is_integer())
                throw InvalidScale("integer structures need a nonzero integer scale, got " +
                                   scale.str());
            break;
        case NumberType::Rational:
        case NumberType::Real:
            if (!scale.is_real())
                throw InvalidScale("real-valued structures need a real scale, got " +
                                   scale.str());
            break;
        case NumberType::Complex: break;
    }
}

// Internal values a structure admits: naturals for Natural, integers for
// Integer, reals for Rational/Real, anything for Complex.
void check_internal(NumberType t, const CRational& v, const char* who) {
    switch (t) {
        case NumberType::Natural:
            if (!v.is_integer() || v.re().is_negative())
                throw DomainError(std::string(who) + ": " + v.str() +
                                  " is not a natural number value");
            break;
        case NumberType::Integer:
            if (!v.is_integer())
                throw DomainError(std::string(who) + ": " + v.str() +
                                  " is not an integer value");
            break;
        case NumberType::Rational:
        case NumberType::Real:
            if (!v.is_real())
                throw DomainError(std::string(who) + ": " + v.str() + " is not a real value");
            break;
        case NumberType::Complex: break;
    }
}

void require_same_owner(const ScaledValue& a, const ScaledValue& b, const char* op) {
    if (!(a.owner() == b.owner()))
        throw StructureMismatch(std::string(op) + ": operands live in " +
                                a.owner().literal() + " and " + b.owner().literal());
}

}  // namespace

StructureHandle::StructureHandle(NumberType type, CRational scale)
    : type_(type), scale_(std::move(scale)) {
    check_scale(type_, scale_);
}

std::string StructureHandle::literal() const {
    std::string s(to_string(type_));
    s += ':';
    s += scale_key(type_);
    s += '=';
    s += scale_.str();
    return s;
}

StructureHandle StructureHandle::from_literal(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError(text.size(), "':' in structure literal");
    const std::string_view kind = text.substr(0, colon);
    NumberType type;
    if (kind == "nat")
        type = NumberType::Natural;
    else if (kind == "int")
        type = NumberType::Integer;
    else if (kind == "rat")
        type = NumberType::Rational;
    else if (kind == "real")
        type = NumberType::Real;
    else if (kind == "cpx")
        type = NumberType::Complex;
    else
        throw ParseError(0, "one of nat:, int:, rat:, real:, cpx:");

    std::string_view rest = text.substr(colon + 1);
    if (rest.size() < 2 || rest[0] != scale_key(type) || rest[1] != '=')
        throw ParseError(colon + 1, std::string(1, scale_key(type)) + "=<scale>");
    auto scale = CRational::try_parse(rest.substr(2));
    if (!scale) throw ParseError(colon + 3, "scale value");
    return StructureHandle(type, *scale);
}

StructureHandle make_structure(NumberType type, const CRational& scale) {
    return StructureHandle(type, scale);
}

ScaledValue::ScaledValue(CRational internal, StructureHandle owner)
    : internal_(std::move(internal)), owner_(std::move(owner)) {
    check_internal(owner_.type(), internal_, "scaled value");
}

ScaledValue same_value(const CRational& a, const StructureHandle& s) {
    return ScaledValue(a, s);
}

bool member_of_base_set(const BaseElement& e, const StructureHandle& s) {
    switch (s.type()) {
        case NumberType::Natural: {
            // multiples n*a with a a natural number
            if (!e.value.is_real()) return false;
            const Rational q = e.value.re() / s.scale().re();
            return q.is_integer() && !q.is_negative();
        }
        case NumberType::Integer: {
            if (!e.value.is_real()) return false;
            const Rational q = e.value.re() / s.scale().re();
            return q.is_integer();
        }
        case NumberType::Rational:
        case NumberType::Real:
        case NumberType::Complex: return true;
    }
    return true;
}

ScaledValue view_value(const BaseElement& e, const StructureHandle& s) {
    if (!member_of_base_set(e, s))
        throw NotInBaseSet(e.value.str() + " has no value in " + s.literal());
    return ScaledValue(e.value / s.scale(), s);
}

ScaledValue add_scaled(const ScaledValue& a, const ScaledValue& b) {
    require_same_owner(a, b, "add");
    return ScaledValue(a.internal() + b.internal(), a.owner());
}

ScaledValue sub_scaled(const ScaledValue& a, const ScaledValue& b) {
    require_same_owner(a, b, "sub");
    // the Natural signature has no total subtraction; the partial one
    // is usable only when the difference stays in the type
    return ScaledValue(a.internal() - b.internal(), a.owner());
}

ScaledValue mul_scaled(const ScaledValue& a, const ScaledValue& b) {
    require_same_owner(a, b, "mul");
    return ScaledValue(a.internal() * b.internal(), a.owner());
}

ScaledValue div_scaled(const ScaledValue& a, const ScaledValue& b) {
    require_same_owner(a, b, "div");
    const NumberType t = a.owner().type();
    if (t == NumberType::Natural || t == NumberType::Integer)
        throw UnsupportedOperation("division is not part of " + a.owner().literal());
    if (b.internal().is_zero()) throw DivisionByZero("div_scaled");
    return ScaledValue(a.internal() / b.internal(), a.owner());
}

bool lt_scaled(const ScaledValue& a, const ScaledValue& b) {
    require_same_owner(a, b, "lt");
    if (!a.owner().ordered())
        throw UnsupportedOperation("no total order on " + a.owner().literal());
    return a.internal().re() < b.internal().re();
}

ScaledValue conj_scaled(const ScaledValue& a) {
    if (a.owner().type() != NumberType::Complex)
        throw UnsupportedOperation("conjugation is not part of " + a.owner().literal());
    return ScaledValue(a.internal().conj(), a.owner());
}

std::pair<double, double> conj_phase_form(const ScaledValue& a) {
    if (a.owner().type() != NumberType::Complex)
        throw UnsupportedOperation("conjugation is not part of " + a.owner().literal());
    const auto [cre, cim] = a.owner().scale().to_doubles();
    const auto [are, aim] = a.internal().to_doubles();
    const std::complex<double> c(cre, cim);
    const std::complex<double> v(are, aim);
    const double phi = std::arg(c);
    const std::complex<double> r = std::polar(1.0, 2.0 * phi) * std::conj(c) * std::conj(v);
    return {r.real(), r.imag()};
}

CRational map_up(const CRational& a, const CRational& p) {
    if (p.is_zero()) throw InvalidScale("W^p needs p != 0");
    return p * a;
}

ScaledValue map_down(const CRational& pa, const StructureHandle& s) {
    return ScaledValue(pa / s.scale(), s);
}

ScaledValue map_composite(const CRational& a, const StructureHandle& s) {
    return map_down(map_up(a, s.scale()), s);
}

StructureHandle compose_scaling(const StructureHandle& s, const CRational& q) {
    // q names a value inside s, so it must be a legal scale of s's type itself
    const StructureHandle step(s.type(), q);
    return StructureHandle(step.type(), q * s.scale());
}

StructureHandle group_op(const StructureHandle& a, const StructureHandle& b) {
    if (a.type() != b.type())
        throw TypeMismatch("group op across " + std::string(to_string(a.type())) + " and " +
                           std::string(to_string(b.type())));
    if (a.type() == NumberType::Natural || a.type() == NumberType::Integer)
        throw UnsupportedOperation("no structure group for " + std::string(to_string(a.type())));
    return StructureHandle(a.type(), a.scale() * b.scale());
}

StructureHandle group_inv(const StructureHandle& a) {
    if (a.type() == NumberType::Natural || a.type() == NumberType::Integer)
        throw UnsupportedOperation("no structure group for " + std::string(to_string(a.type())));
    return StructureHandle(a.type(), a.scale().inv());
}

WyzStructure make_wyz_structure(const CRational& w, const CRational& y, const CRational& z) {
    if (w.is_zero() || y.is_zero() || z.is_zero())
        throw InvalidScale("w, y, z must all be nonzero");
    return WyzStructure{w, y, z};
}

}  // namespace scalerep
