#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scalerep/sequences.hpp"
#include "scalerep/view.hpp"

namespace scalerep {

struct Failure {
    std::string axiom;
    std::map<std::string, std::string> bindings;
    std::string lhs;
    std::string rhs;
    std::string view;  // "base" | "external" | "internal"
};

/// Result of one suite run. Deterministic given (suite, structure, samples,
/// seed); failures are sorted by axiom id, then bindings, then view.
struct CheckReport {
    std::string suite;
    std::string structure;
    std::int64_t cases = 0;
    std::vector<Failure> failures;
    std::uint64_t seed = 0;

    bool pass() const { return failures.empty(); }
    std::string to_json() const;
    std::string summary() const;
};

/// Field axioms (associativity, commutativity, identities, inverses,
/// distributivity) checked on sampled values in base, external and internal
/// view; the three verdicts must coincide case by case.
CheckReport run_field_suite(const StructureHandle& s, int samples, std::uint64_t seed,
                            Corruption corruption = Corruption::None);

/// Order axioms (transitivity, totality, translation and positive-factor
/// compatibility) plus relation uniformity across the three views, with the
/// external relation reversed for negative scales.
CheckReport run_order_suite(const StructureHandle& s, int samples, std::uint64_t seed,
                            Corruption corruption = Corruption::None);

/// Natural-number arithmetic axioms including discreteness:
/// 0 < 1 and every positive value is >= 1, in every view.
CheckReport run_nat_suite(const StructureHandle& s, int samples, std::uint64_t seed,
                          Corruption corruption = Corruption::None);

/// Conjugation axioms (involution, reality of the identity, additivity,
/// multiplicativity) and polynomial root mapping on complex structures.
CheckReport run_conjugation_suite(const StructureHandle& s, int samples, std::uint64_t seed,
                                  Corruption corruption = Corruption::None);

struct ConvergenceOptions {
    std::vector<Rational> eps_schedule;  // default: 1/10, 1/1000, 1/1000000
    std::int64_t index_cap = 1'000'000;
};

ConvergenceOptions default_convergence_options();

/// For each epsilon, finds the minimal Cauchy index h independently in the
/// three views (the scaled condition uses r*a_j against the epsilon whose
/// correspondent is r*eps, with the reflected comparison when r < 0) and
/// requires the three indices to agree. A sequence that never settles is
/// reported as budget-exceeded, which must also be uniform across views.
CheckReport run_convergence_check(const Sequence& seq, const Rational& r,
                                  const ConvergenceOptions& opts = default_convergence_options());

/// Same index mapping for convergence to the known limit mu: eventual
/// |a_j - mu| < eps iff the scaled sequence settles at the value whose
/// correspondent is r*mu.
CheckReport run_limit_mapping(const Sequence& seq, const Rational& r,
                              const ConvergenceOptions& opts = default_convergence_options());

/// Real substructure checks for a complex scale c: scaled nonzero reals
/// c*a never land back in the real base set when c is non-real, and the
/// witness-based order definition agrees across the three views.
CheckReport run_substructure_suite(const CRational& c, int samples, std::uint64_t seed);

struct OrderVerdicts {
    bool base = false;
    bool external = false;
    bool internal = false;

    bool uniform() const { return base == external && external == internal; }
    bool all_true() const { return base && external && internal; }
};

/// a < b via the two-square witness d = conj(g)*g = b - a, decided in base,
/// external and internal view of the complex-scaled structure for c.
/// Throws WitnessRequired without g, DomainError when g does not certify b-a.
OrderVerdicts witness_order_equivalence(const Rational& a, const Rational& b,
                                        const std::optional<CRational>& g, const CRational& c);

/// Negative control: valuation homogeneity of the wyz structure. Checks, in
/// order, the multiplicative-identity axiom (witness "1"), the fixed witness
/// terms x*y and x/y, and sampled random terms; reports the first failure.
/// Passes iff w == y == z.
CheckReport run_wyz_control(const CRational& w, const CRational& y, const CRational& z,
                            int samples, std::uint64_t seed);

}  // namespace scalerep
