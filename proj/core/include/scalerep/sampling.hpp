#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scalerep/term.hpp"

namespace scalerep {

/// Deterministic value source. mt19937_64 output is fully specified by the
/// standard, so identical seeds give identical samples on every platform.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        // uniform_int_distribution is not pinned by the standard; derive the
        // value from raw engine output to keep reports byte-stable
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1U;
        return lo + static_cast<std::int64_t>(rng_() % span);
    }

    bool chance(double p) {
        return static_cast<double>(rng_() >> 11U) * 0x1.0p-53 < p;
    }

    Rational rational(int magnitude = 12, bool allow_negative = true) {
        const std::int64_t num = int_in(allow_negative ? -magnitude : 0, magnitude);
        const std::int64_t den = int_in(1, magnitude);
        return Rational(BigInt(num), BigInt(den));
    }

    Rational nonzero_rational(int magnitude = 12, bool allow_negative = true) {
        for (;;) {
            Rational r = rational(magnitude, allow_negative);
            if (!r.is_zero()) return r;
        }
    }

    CRational gaussian(int magnitude = 12) {
        return CRational(rational(magnitude), rational(magnitude));
    }

    CRational nonzero_gaussian(int magnitude = 12) {
        for (;;) {
            CRational z = gaussian(magnitude);
            if (!z.is_zero()) return z;
        }
    }

    /// A value admissible as an internal value of the given number type.
    CRational value_for(NumberType t, bool nonzero = false, int magnitude = 8) {
        for (;;) {
            CRational v;
            switch (t) {
                case NumberType::Natural: v = CRational(Rational(BigInt(int_in(0, magnitude)))); break;
                case NumberType::Integer:
                    v = CRational(Rational(BigInt(int_in(-magnitude, magnitude))));
                    break;
                case NumberType::Rational:
                case NumberType::Real: v = CRational(rational(magnitude)); break;
                case NumberType::Complex: v = gaussian(magnitude); break;
            }
            if (!nonzero || !v.is_zero()) return v;
        }
    }

  private:
    std::mt19937_64 rng_;
};

/// Term-shape controls for the seeded generator. The distribution is uniform
/// over the permitted node kinds until the depth cap forces a leaf; constants
/// come from a small pool (negatives included unless naturals_only).
struct TermGenOptions {
    int max_depth = 6;
    bool allow_sub = true;
    bool allow_div = true;
    bool naturals_only = false;       // nonnegative integer constants, no sub/div
    bool imaginary_constants = false; // admit pure-imaginary pool constants
    int max_pow = 4;
    int max_sum_width = 3;
    std::vector<std::string> variables = {"x", "y"};
};

TermGenOptions term_options_for(NumberType t);

TermPtr random_term(Sampler& sampler, const TermGenOptions& opts);

/// Binds every variable of opts to a type-admissible value.
Environment random_environment(Sampler& sampler, const TermGenOptions& opts, NumberType t);

}  // namespace scalerep
