#include "scalerep/sampling.hpp"

namespace scalerep {

TermGenOptions term_options_for(NumberType t) {
    TermGenOptions opts;
    switch (t) {
        case NumberType::Natural:
            opts.allow_sub = false;
            opts.allow_div = false;
            opts.naturals_only = true;
            break;
        case NumberType::Integer:
            opts.allow_div = false;
            opts.naturals_only = true;  // integer constants; sub stays on
            opts.allow_sub = true;
            break;
        case NumberType::Rational:
        case NumberType::Real: break;
        case NumberType::Complex: opts.imaginary_constants = true; break;
    }
    return opts;
}

namespace {

CRational pool_constant(Sampler& s, const TermGenOptions& opts) {
    if (opts.naturals_only) {
        static const std::int64_t pool[] = {0, 1, 2, 3, 5};
        return CRational(Rational(BigInt(pool[s.int_in(0, 4)])));
    }
    static const std::pair<std::int64_t, std::int64_t> pool[] = {
        {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}, {1, 3}, {3, 1}, {5, 2},
    };
    const auto [n, d] = pool[s.int_in(0, 9)];
    const Rational mag{BigInt(n), BigInt(d)};
    if (opts.imaginary_constants && s.chance(0.3)) return CRational(Rational(0), mag);
    return CRational(mag);
}

TermPtr gen(Sampler& s, const TermGenOptions& opts, int depth, int sum_nesting) {
    // leaves only once the depth budget is spent
    if (depth >= opts.max_depth) {
        if (s.chance(0.5) && !opts.variables.empty()) {
            return Term::variable(opts.variables[s.int_in(0, opts.variables.size() - 1)]);
        }
        return Term::constant(pool_constant(s, opts));
    }

    enum { Const, Var, Add, Sub, Mul, Div, Pow, Sum };
    std::vector<int> kinds = {Const, Var, Add, Mul, Pow};
    if (opts.allow_sub) kinds.push_back(Sub);
    if (opts.allow_div) kinds.push_back(Div);
    if (sum_nesting < 2) kinds.push_back(Sum);

    switch (kinds[s.int_in(0, kinds.size() - 1)]) {
        case Const: return Term::constant(pool_constant(s, opts));
        case Var:
            if (opts.variables.empty()) return Term::constant(pool_constant(s, opts));
            return Term::variable(opts.variables[s.int_in(0, opts.variables.size() - 1)]);
        case Add:
            return Term::add(gen(s, opts, depth + 1, sum_nesting),
                             gen(s, opts, depth + 1, sum_nesting));
        case Sub:
            return Term::sub(gen(s, opts, depth + 1, sum_nesting),
                             gen(s, opts, depth + 1, sum_nesting));
        case Mul:
            return Term::mul(gen(s, opts, depth + 1, sum_nesting),
                             gen(s, opts, depth + 1, sum_nesting));
        case Div:
            return Term::div(gen(s, opts, depth + 1, sum_nesting),
                             gen(s, opts, depth + 1, sum_nesting));
        case Pow: {
            TermPtr base = gen(s, opts, depth + 1, sum_nesting);
            if (sum_nesting > 0 && s.chance(0.25)) {
                return Term::pow(base, sum_nesting == 1 ? "j" : "k");
            }
            return Term::pow(base, s.int_in(1, opts.max_pow));
        }
        case Sum: {
            const std::string index = sum_nesting == 0 ? "j" : "k";
            const std::int64_t lo = s.int_in(1, 2);
            const std::int64_t hi = lo + s.int_in(0, opts.max_sum_width - 1);
            TermPtr body = gen(s, opts, depth + 1, sum_nesting + 1);
            return Term::sum(index, lo, hi, body);
        }
        default: break;
    }
    return Term::constant(pool_constant(s, opts));
}

}  // namespace

TermPtr random_term(Sampler& sampler, const TermGenOptions& opts) {
    return gen(sampler, opts, 0, 0);
}

Environment random_environment(Sampler& sampler, const TermGenOptions& opts, NumberType t) {
    Environment env;
    for (const auto& name : opts.variables) env[name] = sampler.value_for(t);
    return env;
}

}  // namespace scalerep
