#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scalerep/view.hpp"

namespace scalerep {

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Expression tree over +, -, *, /, integer powers and finite sums.
///
/// Power exponents are meta-level positive integers (they count
/// multiplications and are never scaled); an exponent may also name the index
/// of an enclosing sum, which resolves to a literal at expansion time.
class Term {
  public:
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Pow, Sum };

    static TermPtr constant(CRational value);
    static TermPtr variable(std::string name);
    static TermPtr add(TermPtr lhs, TermPtr rhs);
    static TermPtr sub(TermPtr lhs, TermPtr rhs);
    static TermPtr mul(TermPtr lhs, TermPtr rhs);
    static TermPtr div(TermPtr lhs, TermPtr rhs);
    static TermPtr pow(TermPtr base, std::int64_t exponent);        // exponent >= 1
    static TermPtr pow(TermPtr base, std::string exponent_index);   // sum-index exponent
    static TermPtr sum(std::string index, std::int64_t lo, std::int64_t hi, TermPtr body);

    Kind kind() const { return kind_; }
    const CRational& value() const { return value_; }
    const std::string& name() const { return name_; }
    const TermPtr& lhs() const { return lhs_; }
    const TermPtr& rhs() const { return rhs_; }
    std::int64_t exponent() const { return exp_literal_; }
    bool exponent_is_index() const { return exp_is_index_; }
    const std::string& exponent_index() const { return name_; }
    std::int64_t sum_lo() const { return sum_lo_; }
    std::int64_t sum_hi() const { return sum_hi_; }

    friend bool operator==(const Term& a, const Term& b);

  private:
    Term() = default;

    Kind kind_ = Kind::Constant;
    CRational value_;
    std::string name_;       // variable name, sum index, or pow index exponent
    TermPtr lhs_, rhs_;      // binary children; Pow base / Sum body live in lhs_
    std::int64_t exp_literal_ = 0;
    bool exp_is_index_ = false;
    std::int64_t sum_lo_ = 0, sum_hi_ = 0;
};

bool equal(const TermPtr& a, const TermPtr& b);

/// Bindings from variable names to base values.
using Environment = std::map<std::string, CRational>;

/// Grammar (documented in the README):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ['^' (integer | index)]
///   atom   := literal | identifier | '(' expr ')'
///           | 'sum' '(' index '=' int '..' int ';' expr ')'
/// A literal is a rational "n" or "n/d", optionally suffixed with 'i'.
TermPtr parse_term(std::string_view text);  // throws ParseError

/// Minimal-parenthesis rendering; parse_term(pretty_print(t)) == t structurally.
std::string pretty_print(const TermPtr& t);

std::vector<std::string> free_variables(const TermPtr& t);

/// Evaluation with the base structure's operations.
CRational eval_base(const TermPtr& t, const Environment& env);

/// Evaluation in an external view: every bound value and constant is first
/// injected (a -> p*a) and the view's compensated operations are used. For a
/// scaled view the result equals scale * eval_base exactly.
CRational eval_external(const TermPtr& t, const Environment& env, const ExternalView& view);
CRational eval_external(const TermPtr& t, const Environment& env, const StructureHandle& s);

/// Evaluation routed through the scaled-structure ops; the internal value
/// equals eval_base (sameness) and the correspondent equals eval_external.
ScaledValue eval_internal(const TermPtr& t, const Environment& env, const StructureHandle& s);

struct VerdictTriple {
    bool base = false;
    bool external = false;
    bool internal = false;

    bool uniform() const { return base == external && external == internal; }
    bool all_true() const { return base && external && internal; }
};

/// Does t = u hold? Decided independently in base, external and internal view;
/// the three verdicts always coincide for genuine scaled structures.
VerdictTriple check_equation(const TermPtr& t, const TermPtr& u, const Environment& env,
                             const StructureHandle& s);

/// Is `a` a root of sum_j coeffs[j] * x^j? Checked in all three views of s.
VerdictTriple scaled_poly_root_check(const std::vector<CRational>& coeffs, const CRational& a,
                                     const StructureHandle& s);

struct SeriesValues {
    CRational base;      // P(n, x)
    CRational external;  // r * P(n, x)
    CRational internal;  // same value as P(n, x)
};

/// P(n, x) = sum_{j=1..n} coeffs[j-1] * x^j evaluated in the three views.
SeriesValues power_series_eval(const std::vector<CRational>& coeffs, const CRational& x,
                               const StructureHandle& s);

enum class AnalyticFn { Exp, Sin, SinSquared };

/// f_r(x_r) = r*f(x) on the float layer. The squared sine scales once:
/// r*sin(x)^2, not (r*sin(x))^2.
double analytic_scaled(AnalyticFn f, double x, double r);

}  // namespace scalerep
