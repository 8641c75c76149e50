#include "scalerep/sequences.hpp"

namespace scalerep {

namespace {

Rational half_pow(std::int64_t e) { return Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(e)); }

// a_j = 1/j (+ offset). Tail diameter over j,m > h is 1/(h+1), approached but
// never attained; deviation from the limit is 1/(h+1), attained at j = h+1.
class HarmonicSeq final : public Sequence {
  public:
    explicit HarmonicSeq(Rational offset, std::string name)
        : offset_(std::move(offset)), name_(std::move(name)) {}

    std::string name() const override { return name_; }

    Rational at(std::int64_t j) const override {
        return offset_ + Rational(BigInt(1), BigInt(j));
    }

    std::optional<TailBound> cauchy_tail(std::int64_t h) const override {
        return TailBound{Rational(BigInt(1), BigInt(h + 1)), false};
    }

    std::optional<Rational> limit() const override { return offset_; }

    std::optional<TailBound> limit_tail(std::int64_t h) const override {
        return TailBound{Rational(BigInt(1), BigInt(h + 1)), true};
    }

  private:
    Rational offset_;
    std::string name_;
};

// a_j = 1 + (-1/2)^j. Among indices > h both parities occur at h+1 and h+2,
// so the tail diameter (1/2)^{h+1} + (1/2)^{h+2} = 3/2^{h+2} is attained.
class AltGeomSeq final : public Sequence {
  public:
    std::string name() const override { return "alt_geom"; }

    Rational at(std::int64_t j) const override {
        const Rational step = half_pow(j);
        return (j % 2 == 0) ? Rational(1) + step : Rational(1) - step;
    }

    std::optional<TailBound> cauchy_tail(std::int64_t h) const override {
        return TailBound{Rational(BigInt(3), BigInt(1) << static_cast<unsigned>(h + 2)), true};
    }

    std::optional<Rational> limit() const override { return Rational(1); }

    std::optional<TailBound> limit_tail(std::int64_t h) const override {
        return TailBound{half_pow(h + 1), true};
    }
};

class LinearSeq final : public Sequence {
  public:
    std::string name() const override { return "linear"; }
    Rational at(std::int64_t j) const override { return Rational(BigInt(j)); }
    std::optional<TailBound> cauchy_tail(std::int64_t) const override { return std::nullopt; }
    std::optional<Rational> limit() const override { return std::nullopt; }
    std::optional<TailBound> limit_tail(std::int64_t) const override { return std::nullopt; }
};

class ConstSeq final : public Sequence {
  public:
    explicit ConstSeq(Rational c) : c_(std::move(c)) {}
    std::string name() const override { return "const:" + c_.str(); }
    Rational at(std::int64_t) const override { return c_; }
    std::optional<TailBound> cauchy_tail(std::int64_t) const override {
        return TailBound{Rational(0), true};
    }
    std::optional<Rational> limit() const override { return c_; }
    std::optional<TailBound> limit_tail(std::int64_t) const override {
        return TailBound{Rational(0), true};
    }

  private:
    Rational c_;
};

}  // namespace

std::unique_ptr<Sequence> make_sequence(const std::string& spec) {
    if (spec == "harmonic") return std::make_unique<HarmonicSeq>(Rational(0), "harmonic");
    if (spec == "one_plus_harmonic")
        return std::make_unique<HarmonicSeq>(Rational(1), "one_plus_harmonic");
    if (spec == "alt_geom") return std::make_unique<AltGeomSeq>();
    if (spec == "linear") return std::make_unique<LinearSeq>();
    if (spec.rfind("const:", 0) == 0) {
        auto c = Rational::try_parse(std::string_view(spec).substr(6));
        if (!c) throw ParseError(6, "rational constant in const:<q>");
        return std::make_unique<ConstSeq>(*c);
    }
    throw ParseError(0, "one of harmonic, one_plus_harmonic, alt_geom, linear, const:<q>");
}

}  // namespace scalerep
