#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "scalerep/rational.hpp"

namespace scalerep {

/// An exact real sequence a_1, a_2, ... together with closed-form tail bounds.
/// The bounds are what make the Cauchy / limit conditions decidable at desk
/// scale: "for all j,m > h" reduces to one exact comparison against the tail
/// supremum (strict when the supremum is attained, non-strict otherwise).
class Sequence {
  public:
    struct TailBound {
        Rational sup;
        bool attained;
    };

    virtual ~Sequence() = default;

    virtual std::string name() const = 0;
    virtual Rational at(std::int64_t j) const = 0;  // j >= 1

    /// sup over j,m > h of |a_j - a_m|; nullopt when unbounded.
    virtual std::optional<TailBound> cauchy_tail(std::int64_t h) const = 0;

    virtual std::optional<Rational> limit() const = 0;

    /// sup over j > h of |a_j - limit()|; nullopt when there is no limit.
    virtual std::optional<TailBound> limit_tail(std::int64_t h) const = 0;
};

/// Specs: "harmonic" (1/j), "one_plus_harmonic" (1 + 1/j),
/// "alt_geom" (1 + (-1/2)^j), "linear" (j, divergent), "const:<q>".
std::unique_ptr<Sequence> make_sequence(const std::string& spec);

}  // namespace scalerep
