#pragma once

#include <optional>
#include <string>

#include "scalerep/structure.hpp"

namespace scalerep {

/// Deliberate defects used by the negative-control suites. Each one breaks a
/// single compensation rule in the external representation.
enum class Corruption {
    None,
    UnscaledDiv,     // reads the scaled division as plain division
    UnflippedOrder,  // keeps '<' for negative scales instead of reversing it
    UntwistedConj,   // claims conj(a_c) corresponds to conj(c)*conj(a)
};

/// The external representation of a scaled structure: its values are base
/// values p*a, its operations are the compensated ones (x*y/p, p*(x/y), the
/// constant p). A wyz-flavored view decouples the three scalings, which is
/// exactly what makes it fail to be a scaled structure unless w == y == z.
class ExternalView {
  public:
    static ExternalView of(const StructureHandle& s, Corruption c = Corruption::None);
    static ExternalView wyz(const WyzStructure& s);

    /// The valuation map: injects a base value into this view (p*a, or z*a).
    CRational inject(const CRational& a) const;

    CRational add(const CRational& x, const CRational& y) const;
    CRational sub(const CRational& x, const CRational& y) const;
    CRational mul(const CRational& x, const CRational& y) const;
    CRational div(const CRational& x, const CRational& y) const;
    CRational zero() const { return CRational(0); }
    CRational one() const;

    /// Sign-aware order on view representatives; reversed when the scale is
    /// negative. Throws UnsupportedOperation for Complex-scaled views.
    bool less(const CRational& x, const CRational& y) const;

    /// External conjugation (Complex views only): x -> c*conj(x)/conj(c).
    CRational conj(const CRational& x) const;

    const std::optional<StructureHandle>& handle() const { return handle_; }
    bool is_wyz() const { return wyz_.has_value(); }
    Corruption corruption() const { return corruption_; }
    std::string describe() const;

  private:
    ExternalView() = default;

    std::optional<StructureHandle> handle_;
    std::optional<WyzStructure> wyz_;
    Corruption corruption_ = Corruption::None;
};

}  // namespace scalerep
