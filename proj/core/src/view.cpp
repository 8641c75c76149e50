#include "scalerep/view.hpp"

namespace scalerep {

ExternalView ExternalView::of(const StructureHandle& s, Corruption c) {
    ExternalView v;
    v.handle_ = s;
    v.corruption_ = c;
    return v;
}

ExternalView ExternalView::wyz(const WyzStructure& s) {
    ExternalView v;
    v.wyz_ = s;
    return v;
}

CRational ExternalView::inject(const CRational& a) const {
    return is_wyz() ? wyz_->z * a : handle_->scale() * a;
}

CRational ExternalView::add(const CRational& x, const CRational& y) const { return x + y; }

CRational ExternalView::sub(const CRational& x, const CRational& y) const {
    const CRational r = x - y;
    if (!is_wyz() && handle_->type() == NumberType::Natural) {
        // representatives are n*a; the difference must stay a natural value
        const CRational internal = r / handle_->scale();
        if (!internal.is_integer() || internal.re().is_negative())
            throw DomainError("natural subtraction underflow: " + x.str() + " - " + y.str());
    }
    return r;
}

CRational ExternalView::mul(const CRational& x, const CRational& y) const {
    return is_wyz() ? x * y / wyz_->w : x * y / handle_->scale();
}

CRational ExternalView::div(const CRational& x, const CRational& y) const {
    if (is_wyz()) {
        if (y.is_zero()) throw DivisionByZero("div");
        return wyz_->y * (x / y);
    }
    const NumberType t = handle_->type();
    if (t == NumberType::Natural || t == NumberType::Integer)
        throw UnsupportedOperation("division is not part of " + handle_->literal());
    if (y.is_zero()) throw DivisionByZero("div");
    if (corruption_ == Corruption::UnscaledDiv) return x / y;
    return handle_->scale() * (x / y);
}

CRational ExternalView::one() const { return is_wyz() ? wyz_->z : handle_->scale(); }

bool ExternalView::less(const CRational& x, const CRational& y) const {
    if (is_wyz()) throw UnsupportedOperation("wyz control views carry no order");
    if (!handle_->ordered())
        throw UnsupportedOperation("no total order on " + handle_->literal());
    const bool reversed =
        handle_->order_reversed() && corruption_ != Corruption::UnflippedOrder;
    return reversed ? y.re() < x.re() : x.re() < y.re();
}

CRational ExternalView::conj(const CRational& x) const {
    if (is_wyz() || handle_->type() != NumberType::Complex)
        throw UnsupportedOperation("conjugation requires a complex view");
    if (corruption_ == Corruption::UntwistedConj) return x.conj();
    const CRational& c = handle_->scale();
    return c * x.conj() / c.conj();
}

std::string ExternalView::describe() const {
    if (is_wyz())
        return "wyz:w=" + wyz_->w.str() + ",y=" + wyz_->y.str() + ",z=" + wyz_->z.str();
    return handle_->literal();
}

}  // namespace scalerep
