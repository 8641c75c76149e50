#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "scalerep/crational.hpp"

namespace scalerep {

enum class NumberType { Natural, Integer, Rational, Real, Complex };

std::string_view to_string(NumberType t);

/// One scaled structure: a number type together with its nonzero scale factor.
///
/// Scale domain per type: Natural takes a positive integer n, Integer a nonzero
/// integer j, Rational/Real a nonzero rational r, Complex any nonzero value c.
class StructureHandle {
  public:
    StructureHandle(NumberType type, CRational scale);  // throws InvalidScale

    NumberType type() const { return type_; }
    const CRational& scale() const { return scale_; }

    /// p == 1: correspondence and sameness coincide.
    bool is_base() const { return scale_ == CRational(1); }
    /// Every type except Complex carries a total order.
    bool ordered() const { return type_ != NumberType::Complex; }
    /// The external order relation is reversed for negative scales.
    bool order_reversed() const { return ordered() && scale_.re().is_negative(); }

    /// "rat:r=3/2" style literal; round-trips through from_literal().
    std::string literal() const;
    static StructureHandle from_literal(std::string_view text);

    friend bool operator==(const StructureHandle& a, const StructureHandle& b) {
        return a.type_ == b.type_ && a.scale_ == b.scale_;
    }

  private:
    NumberType type_;
    CRational scale_;
};

StructureHandle make_structure(NumberType type, const CRational& scale);

/// An element of the base set, identified by its value in the scale-1 structure.
struct BaseElement {
    CRational value;

    friend bool operator==(const BaseElement& a, const BaseElement& b) {
        return a.value == b.value;
    }
};

/// A value as seen inside its owning structure. The element of the base set it
/// names is scale * internal (its correspondent); the internal value itself is
/// the "same" value the base structure would call internal.
class ScaledValue {
  public:
    ScaledValue(CRational internal, StructureHandle owner);  // throws DomainError

    const CRational& internal() const { return internal_; }
    const StructureHandle& owner() const { return owner_; }

    BaseElement correspondent() const { return BaseElement{owner_.scale() * internal_}; }

    friend bool operator==(const ScaledValue& a, const ScaledValue& b) {
        return a.owner_ == b.owner_ && a.internal_ == b.internal_;
    }

    std::string str() const { return internal_.str(); }

  private:
    CRational internal_;
    StructureHandle owner_;
};

/// a_p: the value in s playing the same role that a plays in the base structure.
/// Its correspondent is scale*a, not a, unless the scale is 1.
ScaledValue same_value(const CRational& a, const StructureHandle& s);

/// Inverse direction: which value does this base-set element carry inside s?
/// Throws NotInBaseSet when the element is absent from s's base set
/// (possible only for Natural/Integer structures).
ScaledValue view_value(const BaseElement& e, const StructureHandle& s);

bool member_of_base_set(const BaseElement& e, const StructureHandle& s);

ScaledValue add_scaled(const ScaledValue& a, const ScaledValue& b);
ScaledValue sub_scaled(const ScaledValue& a, const ScaledValue& b);
ScaledValue mul_scaled(const ScaledValue& a, const ScaledValue& b);
ScaledValue div_scaled(const ScaledValue& a, const ScaledValue& b);
bool lt_scaled(const ScaledValue& a, const ScaledValue& b);
ScaledValue conj_scaled(const ScaledValue& a);

/// Float-layer form of scaled conjugation, via the polar decomposition of the
/// scale: e^{2i phi} * conj(c) * conj(a) as a (re, im) pair. Agrees with the
/// exact correspondent of conj_scaled within 1e-9 relative error.
std::pair<double, double> conj_phase_form(const ScaledValue& a);

/// W^p: a -> p*a (maps the base structure onto the external view).
CRational map_up(const CRational& a, const CRational& p);

/// W_p: pa -> a_p (maps external representatives onto internal values).
ScaledValue map_down(const CRational& pa, const StructureHandle& s);

/// F_p = W_p after W^p; identical to same_value.
ScaledValue map_composite(const CRational& a, const StructureHandle& s);

/// Two scaling steps, first p then q, collapse to one step with scale q*p.
/// q is the sameness image in s of a base value; the steps commute.
StructureHandle compose_scaling(const StructureHandle& s, const CRational& q);

/// Group of scaled structures of one field type: op(S_c, S_d) = S_{cd},
/// identity S_1, inverse S_{1/c}. Rational/Real/Complex only.
StructureHandle group_op(const StructureHandle& a, const StructureHandle& b);
StructureHandle group_inv(const StructureHandle& a);

/// Negative-control structure with independently chosen scalings: external
/// multiplication x*y/w, division y*(x/y'), constants mapped by z. Represents
/// a genuine scaled structure only when w == y == z.
struct WyzStructure {
    CRational w;
    CRational y;
    CRational z;
};

WyzStructure make_wyz_structure(const CRational& w, const CRational& y, const CRational& z);

}  // namespace scalerep
