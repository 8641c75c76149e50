#include "scalerep/axiom.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include <json.hpp>

#include "scalerep/sampling.hpp"
#include "scalerep/term.hpp"

namespace scalerep {

// ---------------------------------------------------------------------------
// report rendering

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["structure"] = structure;
    j["cases"] = cases;
    j["seed"] = seed;
    j["pass"] = pass();
    nlohmann::json arr = nlohmann::json::array();
    for (const Failure& f : failures) {
        nlohmann::json fj;
        fj["axiom"] = f.axiom;
        fj["bindings"] = f.bindings;
        fj["lhs"] = f.lhs;
        fj["rhs"] = f.rhs;
        fj["view"] = f.view;
        arr.push_back(fj);
    }
    j["failures"] = arr;
    return j.dump();
}

std::string CheckReport::summary() const {
    std::string s = "suite " + suite + " on " + structure + ": " + std::to_string(cases) +
                    " cases, " + (pass() ? "PASS" : "FAIL") + " (seed " + std::to_string(seed) +
                    ")";
    const std::size_t shown = std::min<std::size_t>(failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
        const Failure& f = failures[i];
        s += "\n  " + f.axiom + " [" + f.view + "]";
        for (const auto& [k, v] : f.bindings) s += " " + k + "=" + v;
        s += ": " + f.lhs + " vs " + f.rhs;
    }
    if (failures.size() > shown)
        s += "\n  ... and " + std::to_string(failures.size() - shown) + " more failures";
    return s;
}

// ---------------------------------------------------------------------------
// the three evaluation routes, presented through one interface

namespace {

using Binding = std::vector<CRational>;

struct Outcome {
    bool holds = false;
    std::string lhs;
    std::string rhs;
    std::string detail;  // branch bits of compound cases; must match across views
};

struct BaseOps {
    using V = CRational;
    static constexpr const char* view_name = "base";

    V inject(const CRational& a) const { return a; }
    V add(const V& x, const V& y) const { return x + y; }
    V sub(const V& x, const V& y) const { return x - y; }
    V mul(const V& x, const V& y) const { return x * y; }
    V div(const V& x, const V& y) const {
        if (y.is_zero()) throw DivisionByZero("div");
        return x / y;
    }
    V zero() const { return CRational(0); }
    V one() const { return CRational(1); }
    bool eq(const V& x, const V& y) const { return x == y; }
    bool lt(const V& x, const V& y) const { return x.re() < y.re(); }
    V conj(const V& x) const { return x.conj(); }
    std::string str(const V& x) const { return x.str(); }
};

struct ExternalOps {
    ExternalView view;
    using V = CRational;
    static constexpr const char* view_name = "external";

    V inject(const CRational& a) const { return view.inject(a); }
    V add(const V& x, const V& y) const { return view.add(x, y); }
    V sub(const V& x, const V& y) const { return view.sub(x, y); }
    V mul(const V& x, const V& y) const { return view.mul(x, y); }
    V div(const V& x, const V& y) const { return view.div(x, y); }
    V zero() const { return view.zero(); }
    V one() const { return view.one(); }
    bool eq(const V& x, const V& y) const { return x == y; }
    bool lt(const V& x, const V& y) const { return view.less(x, y); }
    V conj(const V& x) const { return view.conj(x); }
    std::string str(const V& x) const { return x.str(); }
};

struct InternalOps {
    StructureHandle s;
    using V = ScaledValue;
    static constexpr const char* view_name = "internal";

    V inject(const CRational& a) const { return same_value(a, s); }
    V add(const V& x, const V& y) const { return add_scaled(x, y); }
    V sub(const V& x, const V& y) const { return sub_scaled(x, y); }
    V mul(const V& x, const V& y) const { return mul_scaled(x, y); }
    V div(const V& x, const V& y) const { return div_scaled(x, y); }
    V zero() const { return same_value(CRational(0), s); }
    V one() const { return same_value(CRational(1), s); }
    bool eq(const V& x, const V& y) const { return x == y; }
    bool lt(const V& x, const V& y) const { return lt_scaled(x, y); }
    V conj(const V& x) const { return conj_scaled(x); }
    std::string str(const V& x) const { return x.str(); }
};

struct Case {
    std::string id;
    int arity = 0;
    bool must_hold = true;
    std::function<Outcome(const BaseOps&, const Binding&)> base;
    std::function<Outcome(const ExternalOps&, const Binding&)> external;
    std::function<Outcome(const InternalOps&, const Binding&)> internal;
};

template <class F>
Case make_case(std::string id, int arity, bool must_hold, F f) {
    Case c;
    c.id = std::move(id);
    c.arity = arity;
    c.must_hold = must_hold;
    c.base = [f](const BaseOps& o, const Binding& b) { return f(o, b); };
    c.external = [f](const ExternalOps& o, const Binding& b) { return f(o, b); };
    c.internal = [f](const InternalOps& o, const Binding& b) { return f(o, b); };
    return c;
}

Outcome vacuous() { return Outcome{true, "-", "-", "guard"}; }

// Boundary values worth hitting on every run; random samples follow.
std::vector<CRational> boundary_pool(const StructureHandle& s) {
    std::vector<CRational> pool;
    auto push = [&pool](const CRational& v) {
        for (const CRational& p : pool)
            if (p == v) return;
        pool.push_back(v);
    };
    const CRational p = s.scale();
    switch (s.type()) {
        case NumberType::Natural:
            push(CRational(0));
            push(CRational(1));
            push(CRational(2));
            push(p);
            break;
        case NumberType::Integer:
            push(CRational(0));
            push(CRational(1));
            push(CRational(-1));
            push(CRational(2));
            push(p);
            push(-p);
            break;
        default:
            push(CRational(0));
            push(CRational(1));
            push(CRational(-1));
            push(CRational(Rational(BigInt(1), BigInt(2))));
            push(CRational(Rational(BigInt(-1), BigInt(2))));
            push(p);
            push(p.inv());
            break;
    }
    return pool;
}

std::vector<Binding> make_bindings(Sampler& sampler, const std::vector<CRational>& pool,
                                   NumberType t, int arity, int samples) {
    std::vector<Binding> out;
    if (arity == 0) {
        out.emplace_back();
        return out;
    }
    const int cap = std::min(samples, 25);
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    while (static_cast<int>(out.size()) < cap) {
        Binding b;
        for (std::size_t i : idx) b.push_back(pool[i]);
        out.push_back(std::move(b));
        int k = arity - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == pool.size()) {
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    while (static_cast<int>(out.size()) < samples) {
        Binding b;
        for (int i = 0; i < arity; ++i) b.push_back(sampler.value_for(t));
        out.push_back(std::move(b));
    }
    return out;
}

std::map<std::string, std::string> binding_names(const Binding& b) {
    static const char* names[] = {"a", "b", "c", "d"};
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < b.size() && i < 4; ++i) m[names[i]] = b[i].str();
    return m;
}

void sort_failures(std::vector<Failure>& fs) {
    std::sort(fs.begin(), fs.end(), [](const Failure& a, const Failure& b) {
        auto key = [](const Failure& f) {
            std::string bind;
            for (const auto& [k, v] : f.bindings) bind += k + "=" + v + ";";
            return std::tuple<const std::string&, std::string, const std::string&>(f.axiom, bind,
                                                                                   f.view);
        };
        return key(a) < key(b);
    });
}

CheckReport run_cases(const std::string& suite, const StructureHandle& s,
                      const std::vector<Case>& cases, int samples, std::uint64_t seed,
                      Corruption corruption) {
    if (samples < 1) throw DomainError("samples must be >= 1");
    CheckReport rep;
    rep.suite = suite;
    rep.structure = s.literal();
    rep.seed = seed;

    const BaseOps base;
    const ExternalOps external{ExternalView::of(s, corruption)};
    const InternalOps internal{s};

    Sampler sampler(seed);
    const std::vector<CRational> pool = boundary_pool(s);

    for (const Case& c : cases) {
        const std::vector<Binding> bindings =
            make_bindings(sampler, pool, s.type(), c.arity, samples);
        for (const Binding& b : bindings) {
            ++rep.cases;
            const Outcome ob = c.base(base, b);
            const Outcome oe = c.external(external, b);
            const Outcome oi = c.internal(internal, b);
            const bool uniform = ob.holds == oe.holds && oe.holds == oi.holds &&
                                 ob.detail == oe.detail && oe.detail == oi.detail;
            if (uniform && (!c.must_hold || ob.holds)) continue;

            const auto names = binding_names(b);
            auto blame = [&](const char* view, const Outcome& o) {
                rep.failures.push_back(Failure{c.id, names, o.lhs, o.rhs, view});
            };
            if (!uniform) {
                if (oe.holds != ob.holds || oe.detail != ob.detail) blame("external", oe);
                if (oi.holds != ob.holds || oi.detail != ob.detail) blame("internal", oi);
                if (!c.must_hold) continue;
                if (!ob.holds) blame("base", ob);
            } else {
                blame("base", ob);  // uniformly false where the axiom must hold
            }
        }
    }
    sort_failures(rep.failures);
    return rep;
}

// ---------------------------------------------------------------------------
// axiom predicates

template <class Ops>
Outcome two_sided(const Ops& o, const typename Ops::V& l, const typename Ops::V& r,
                  std::string detail = {}) {
    return Outcome{o.eq(l, r), o.str(l), o.str(r), std::move(detail)};
}

std::vector<Case> field_cases() {
    std::vector<Case> cs;
    cs.push_back(make_case("field.add_assoc", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        return two_sided(o, o.add(o.add(A, B), C), o.add(A, o.add(B, C)));
    }));
    cs.push_back(make_case("field.add_comm", 2, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        return two_sided(o, o.add(A, B), o.add(B, A));
    }));
    cs.push_back(make_case("field.add_identity", 1, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]);
        return two_sided(o, o.add(A, o.zero()), A);
    }));
    cs.push_back(make_case("field.add_inverse", 1, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]);
        return two_sided(o, o.add(A, o.sub(o.zero(), A)), o.zero());
    }));
    cs.push_back(make_case("field.mul_assoc", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        return two_sided(o, o.mul(o.mul(A, B), C), o.mul(A, o.mul(B, C)));
    }));
    cs.push_back(make_case("field.mul_comm", 2, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        return two_sided(o, o.mul(A, B), o.mul(B, A));
    }));
    cs.push_back(make_case("field.mul_identity", 1, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]);
        return two_sided(o, o.mul(A, o.one()), A);
    }));
    cs.push_back(make_case("field.mul_inverse", 1, true, [](const auto& o, const Binding& b) {
        if (b[0].is_zero()) return vacuous();
        auto A = o.inject(b[0]);
        return two_sided(o, o.mul(o.div(o.one(), A), A), o.one());
    }));
    cs.push_back(make_case("field.distributive", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        return two_sided(o, o.mul(A, o.add(B, C)), o.add(o.mul(A, B), o.mul(A, C)));
    }));
    cs.push_back(make_case("field.mul_div_inverse", 2, true, [](const auto& o, const Binding& b) {
        if (b[1].is_zero()) return vacuous();
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        return two_sided(o, o.mul(o.div(A, B), B), A);
    }));
    cs.push_back(make_case("field.div_self", 1, true, [](const auto& o, const Binding& b) {
        if (b[0].is_zero()) return vacuous();
        auto A = o.inject(b[0]);
        return two_sided(o, o.div(A, A), o.one());
    }));
    return cs;
}

std::vector<Case> order_cases(const std::string& prefix) {
    std::vector<Case> cs;
    cs.push_back(make_case(prefix + ".lt_uniformity", 2, false, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        const bool lt = o.lt(A, B);
        return Outcome{lt, o.str(A), o.str(B), ""};
    }));
    cs.push_back(make_case(prefix + ".transitivity", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        const bool p1 = o.lt(A, B), p2 = o.lt(B, C);
        const bool holds = !(p1 && p2) || o.lt(A, C);
        return Outcome{holds, o.str(A), o.str(C),
                       std::string(p1 ? "1" : "0") + (p2 ? "1" : "0")};
    }));
    cs.push_back(make_case(prefix + ".totality", 2, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        const bool lt = o.lt(A, B), eq = o.eq(A, B), gt = o.lt(B, A);
        const int count = int(lt) + int(eq) + int(gt);
        const char branch = lt ? '<' : (eq ? '=' : (gt ? '>' : '?'));
        return Outcome{count == 1, o.str(A), o.str(B), std::string(1, branch)};
    }));
    cs.push_back(make_case(prefix + ".translation", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        const bool premise = o.lt(A, B);
        const bool holds = !premise || o.lt(o.add(A, C), o.add(B, C));
        return Outcome{holds, o.str(A), o.str(B), premise ? "1" : "0"};
    }));
    cs.push_back(make_case(prefix + ".mul_pos", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        const bool premise = o.lt(A, B) && o.lt(o.zero(), C);
        const bool holds = !premise || o.lt(o.mul(A, C), o.mul(B, C));
        return Outcome{holds, o.str(A), o.str(B), premise ? "1" : "0"};
    }));
    return cs;
}

std::vector<Case> nat_equational_cases() {
    std::vector<Case> cs;
    cs.push_back(make_case("nat.add_assoc", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        return two_sided(o, o.add(o.add(A, B), C), o.add(A, o.add(B, C)));
    }));
    cs.push_back(make_case("nat.add_comm", 2, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        return two_sided(o, o.add(A, B), o.add(B, A));
    }));
    cs.push_back(make_case("nat.add_identity", 1, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]);
        return two_sided(o, o.add(A, o.zero()), A);
    }));
    cs.push_back(make_case("nat.mul_assoc", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        return two_sided(o, o.mul(o.mul(A, B), C), o.mul(A, o.mul(B, C)));
    }));
    cs.push_back(make_case("nat.mul_comm", 2, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        return two_sided(o, o.mul(A, B), o.mul(B, A));
    }));
    cs.push_back(make_case("nat.mul_identity", 1, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]);
        return two_sided(o, o.mul(A, o.one()), A);
    }));
    cs.push_back(make_case("nat.distributive", 3, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]), C = o.inject(b[2]);
        return two_sided(o, o.mul(A, o.add(B, C)), o.add(o.mul(A, B), o.mul(A, C)));
    }));
    cs.push_back(make_case("nat.discreteness", 1, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]);
        const bool zero_lt_one = o.lt(o.zero(), o.one());
        const bool positive = o.lt(o.zero(), A);
        const bool ge_one = !o.lt(A, o.one());
        const bool holds = zero_lt_one && (!positive || ge_one);
        return Outcome{holds, o.str(A), o.str(o.one()),
                       std::string(zero_lt_one ? "1" : "0") + (positive ? "1" : "0")};
    }));
    return cs;
}

std::vector<Case> conjugation_cases() {
    std::vector<Case> cs;
    cs.push_back(make_case("complex.conj_involution", 1, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]);
        return two_sided(o, o.conj(o.conj(A)), A);
    }));
    cs.push_back(make_case("complex.conj_identity_real", 0, true, [](const auto& o, const Binding&) {
        return two_sided(o, o.conj(o.one()), o.one());
    }));
    cs.push_back(make_case("complex.conj_additive", 2, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        return two_sided(o, o.conj(o.add(A, B)), o.add(o.conj(A), o.conj(B)));
    }));
    cs.push_back(make_case("complex.conj_multiplicative", 2, true, [](const auto& o, const Binding& b) {
        auto A = o.inject(b[0]), B = o.inject(b[1]);
        return two_sided(o, o.conj(o.mul(A, B)), o.mul(o.conj(A), o.conj(B)));
    }));
    // polynomial built from the bound roots; its roots must map across views
    cs.push_back(make_case("complex.root_mapping", 2, true, [](const auto& o, const Binding& b) {
        const CRational rho = b[0], sigma = b[1];
        // (x - rho)(x - sigma) = rho*sigma - (rho+sigma) x + x^2
        const std::vector<CRational> coeffs = {rho * sigma, -(rho + sigma), CRational(1)};
        CRational probe = rho + CRational(1);
        if (probe == sigma) probe = rho + CRational(2);

        auto eval_at = [&o, &coeffs](const CRational& x) {
            auto X = o.inject(x);
            auto acc = o.zero();
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                auto mono = o.inject(coeffs[j]);
                for (std::size_t k = 0; k < j; ++k) mono = o.mul(mono, X);
                acc = o.add(acc, mono);
            }
            return acc;
        };
        auto at_root = eval_at(rho);
        auto at_probe = eval_at(probe);
        const bool root_ok = o.eq(at_root, o.zero());
        const bool probe_nonroot = !o.eq(at_probe, o.zero());
        return Outcome{root_ok && probe_nonroot, o.str(at_root), o.str(at_probe),
                       std::string(root_ok ? "1" : "0") + (probe_nonroot ? "1" : "0")};
    }));
    // double roots: (x - rho)^2 (x - sigma)^2, degree 4
    cs.push_back(make_case("complex.root_mapping_multi", 2, true, [](const auto& o, const Binding& b) {
        const CRational rho = b[0], sigma = b[1];
        const CRational s1 = rho + sigma, s2 = rho * sigma;
        // expand ((x - rho)(x - sigma))^2 = (x^2 - s1 x + s2)^2
        const std::vector<CRational> coeffs = {
            s2 * s2, -(CRational(2) * s1 * s2), s1 * s1 + CRational(2) * s2, -(CRational(2) * s1),
            CRational(1)};
        auto eval_at = [&o, &coeffs](const CRational& x) {
            auto X = o.inject(x);
            auto acc = o.zero();
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                auto mono = o.inject(coeffs[j]);
                for (std::size_t k = 0; k < j; ++k) mono = o.mul(mono, X);
                acc = o.add(acc, mono);
            }
            return acc;
        };
        auto at_root = eval_at(sigma);
        return two_sided(o, at_root, o.zero());
    }));
    return cs;
}

}  // namespace

// ---------------------------------------------------------------------------
// suite entry points

CheckReport run_field_suite(const StructureHandle& s, int samples, std::uint64_t seed,
                            Corruption corruption) {
    if (s.type() != NumberType::Rational && s.type() != NumberType::Real &&
        s.type() != NumberType::Complex)
        throw TypeMismatch("field suite needs a rational, real or complex structure");
    return run_cases("field", s, field_cases(), samples, seed, corruption);
}

CheckReport run_order_suite(const StructureHandle& s, int samples, std::uint64_t seed,
                            Corruption corruption) {
    if (s.type() == NumberType::Complex)
        throw TypeMismatch("order suite needs an ordered structure");
    return run_cases("order", s, order_cases("order"), samples, seed, corruption);
}

CheckReport run_nat_suite(const StructureHandle& s, int samples, std::uint64_t seed,
                          Corruption corruption) {
    if (s.type() != NumberType::Natural)
        throw TypeMismatch("nat suite needs a natural-number structure");
    std::vector<Case> cases = nat_equational_cases();
    for (Case& c : order_cases("order")) cases.push_back(std::move(c));
    return run_cases("nat", s, cases, samples, seed, corruption);
}

CheckReport run_conjugation_suite(const StructureHandle& s, int samples, std::uint64_t seed,
                                  Corruption corruption) {
    if (s.type() != NumberType::Complex)
        throw TypeMismatch("conjugation suite needs a complex structure");
    return run_cases("conj", s, conjugation_cases(), samples, seed, corruption);
}

// ---------------------------------------------------------------------------
// convergence / limit index mapping

ConvergenceOptions default_convergence_options() {
    ConvergenceOptions opts;
    opts.eps_schedule = {Rational(BigInt(1), BigInt(10)), Rational(BigInt(1), BigInt(1000)),
                         Rational(BigInt(1), BigInt(1000000))};
    return opts;
}

namespace {

// Minimal h in [0, cap] satisfying a monotone condition; nullopt when even
// cap fails (the budget is exceeded).
std::optional<std::int64_t> minimal_index(const std::function<bool(std::int64_t)>& cond,
                                          std::int64_t cap) {
    if (!cond(cap)) return std::nullopt;
    if (cond(0)) return 0;
    std::int64_t lo = 0, hi = 1;
    while (hi < cap && !cond(hi)) {
        lo = hi;
        hi = std::min(cap, hi * 2);
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (cond(mid) ? hi : lo) = mid;
    }
    return hi;
}

// Decides "tail stays strictly below eps" from an exact tail supremum: strict
// comparison when the supremum is attained, non-strict otherwise.
bool tail_ok_base(const std::optional<Sequence::TailBound>& tb, const Rational& eps) {
    if (!tb) return false;
    return tb->attained ? tb->sup < eps : tb->sup <= eps;
}

// External route: quantities are scaled by r, and for r < 0 the reflected
// absolute value makes the condition r*sup > r*eps (">" read in the view).
bool tail_ok_external(const std::optional<Sequence::TailBound>& tb, const Rational& eps,
                      const Rational& r) {
    if (!tb) return false;
    const Rational lhs = r * tb->sup;
    const Rational rhs = r * eps;
    if (r.is_positive()) return tb->attained ? lhs < rhs : lhs <= rhs;
    return tb->attained ? lhs > rhs : lhs >= rhs;
}

std::string index_str(const std::optional<std::int64_t>& h) {
    return h ? std::to_string(*h) : "budget_exceeded";
}

CheckReport run_index_mapping(const Sequence& seq, const Rational& r,
                              const ConvergenceOptions& opts, bool to_limit) {
    if (r.is_zero()) throw InvalidScale("scale must be nonzero");
    CheckReport rep;
    rep.suite = std::string(to_limit ? "limit" : "convergence") + ":" + seq.name();
    rep.structure = StructureHandle(NumberType::Real, CRational(r)).literal();
    rep.seed = 0;

    if (to_limit && !seq.limit() && seq.cauchy_tail(0)) {
        // only sequences with a known limit or none at all are meaningful here
        throw DomainError("limit mapping needs a sequence with a known limit");
    }

    for (const Rational& eps : opts.eps_schedule) {
        if (!eps.is_positive()) throw DomainError("epsilon schedule must be positive");
        ++rep.cases;

        auto tail = [&](std::int64_t h) {
            return to_limit ? seq.limit_tail(h) : seq.cauchy_tail(h);
        };
        const auto h_base =
            minimal_index([&](std::int64_t h) { return tail_ok_base(tail(h), eps); },
                          opts.index_cap);
        const auto h_external =
            minimal_index([&](std::int64_t h) { return tail_ok_external(tail(h), eps, r); },
                          opts.index_cap);
        // the internal condition is the base condition read inside the scaled
        // structure; its quantities are the internal values themselves
        const auto h_internal =
            minimal_index([&](std::int64_t h) { return tail_ok_base(tail(h), eps); },
                          opts.index_cap);

        if (h_base == h_external && h_external == h_internal) continue;

        std::map<std::string, std::string> binds{{"epsilon", eps.str()},
                                                 {"h_base", index_str(h_base)},
                                                 {"h_external", index_str(h_external)},
                                                 {"h_internal", index_str(h_internal)}};
        if (h_external != h_base)
            rep.failures.push_back(Failure{to_limit ? "limit.index" : "cauchy.index", binds,
                                           index_str(h_external), index_str(h_base), "external"});
        if (h_internal != h_base)
            rep.failures.push_back(Failure{to_limit ? "limit.index" : "cauchy.index", binds,
                                           index_str(h_internal), index_str(h_base), "internal"});
    }
    sort_failures(rep.failures);
    return rep;
}

}  // namespace

CheckReport run_convergence_check(const Sequence& seq, const Rational& r,
                                  const ConvergenceOptions& opts) {
    return run_index_mapping(seq, r, opts, false);
}

CheckReport run_limit_mapping(const Sequence& seq, const Rational& r,
                              const ConvergenceOptions& opts) {
    return run_index_mapping(seq, r, opts, true);
}

// ---------------------------------------------------------------------------
// real substructures of a complex-scaled structure

OrderVerdicts witness_order_equivalence(const Rational& a, const Rational& b,
                                        const std::optional<CRational>& g, const CRational& c) {
    if (!g) throw WitnessRequired("two-square witness g with conj(g)*g = b - a");
    if (c.is_zero()) throw InvalidScale("scale must be nonzero");
    const Rational d = b - a;
    const CRational certificate = g->conj() * *g;
    if (!(certificate == CRational(d)))
        throw DomainError("witness does not certify b - a: conj(g)*g = " + certificate.str());

    OrderVerdicts out;
    // base: a + d = b with d = conj(g) g positive
    out.base = CRational(a) + certificate == CRational(b) && d.is_positive();

    // external: c*a + c*d = c*b where c*d is produced by (cg)^{*_c} x_c (cg)
    const StructureHandle s(NumberType::Complex, c);
    const ExternalView view = ExternalView::of(s);
    const CRational cg = view.inject(*g);
    const CRational cd = view.mul(view.conj(cg), cg);
    out.external = view.add(view.inject(CRational(a)), cd) == view.inject(CRational(b)) &&
                   (cd / c).re().is_positive();

    // internal: a_c +_c d_c = b_c with d_c = conj(g_c) x_c g_c
    const ScaledValue gc = same_value(*g, s);
    const ScaledValue dc = mul_scaled(conj_scaled(gc), gc);
    out.internal = add_scaled(same_value(CRational(a), s), dc) == same_value(CRational(b), s) &&
                   dc.internal().re().is_positive();
    return out;
}

CheckReport run_substructure_suite(const CRational& c, int samples, std::uint64_t seed) {
    if (c.is_zero()) throw InvalidScale("scale must be nonzero");
    if (samples < 1) throw DomainError("samples must be >= 1");
    CheckReport rep;
    rep.suite = "sub";
    rep.structure = StructureHandle(NumberType::Complex, c).literal();
    rep.seed = seed;

    Sampler sampler(seed);
    const bool c_real = c.is_real();

    for (int i = 0; i < samples; ++i) {
        ++rep.cases;
        const Rational a = sampler.nonzero_rational();
        const CRational ca = c * CRational(a);
        // non-real c scatters every nonzero real off the real axis; real c
        // keeps the element sets identical
        const bool holds = c_real ? ca.is_real() : !ca.is_real();
        if (!holds)
            rep.failures.push_back(Failure{"sub.scaled_real_disjoint",
                                           {{"a", a.str()}},
                                           ca.str(),
                                           c_real ? "a real value" : "a non-real value",
                                           "base"});
    }

    for (int i = 0; i < samples; ++i) {
        ++rep.cases;
        const Rational a = sampler.rational();
        const CRational g = sampler.nonzero_gaussian();
        const Rational d = (g.conj() * g).re();  // positive by construction
        const Rational b = a + d;
        const OrderVerdicts v = witness_order_equivalence(a, b, g, c);
        if (v.all_true()) continue;
        const auto binds = std::map<std::string, std::string>{
            {"a", a.str()}, {"b", b.str()}, {"g", g.str()}};
        if (!v.base)
            rep.failures.push_back(Failure{"sub.order_witness", binds, "a<b", "true", "base"});
        if (!v.external)
            rep.failures.push_back(
                Failure{"sub.order_witness", binds, "ca<^c cb", "true", "external"});
        if (!v.internal)
            rep.failures.push_back(
                Failure{"sub.order_witness", binds, "a_c<_c b_c", "true", "internal"});
    }
    sort_failures(rep.failures);
    return rep;
}

// ---------------------------------------------------------------------------
// wyz negative control

CheckReport run_wyz_control(const CRational& w, const CRational& y, const CRational& z,
                            int samples, std::uint64_t seed) {
    if (samples < 1) throw DomainError("samples must be >= 1");
    const WyzStructure s = make_wyz_structure(w, y, z);
    const ExternalView view = ExternalView::wyz(s);

    CheckReport rep;
    rep.suite = "wyz";
    rep.structure = view.describe();
    rep.seed = seed;

    Sampler sampler(seed);

    // (1) is z the multiplicative identity? za * (z) / w = za
    const CRational probe_values[] = {CRational(1), CRational(2),
                                      CRational(Rational(BigInt(-3), BigInt(2)))};
    for (const CRational& a : probe_values) {
        ++rep.cases;
        const CRational lhs = view.mul(view.inject(a), view.one());
        const CRational rhs = view.inject(a);
        if (lhs == rhs) continue;
        rep.failures.push_back(Failure{"wyz.mul_identity",
                                       {{"term", "1"}, {"a", a.str()}},
                                       lhs.str(),
                                       rhs.str(),
                                       "external"});
        return rep;  // minimal witness only
    }

    // (2) valuation homogeneity: external value must be z * base value,
    // first on the fixed witness terms, then on sampled ones
    std::vector<TermPtr> pool = {parse_term("x * y"), parse_term("x / y")};
    TermGenOptions opts;
    opts.max_depth = 4;

    auto check_term = [&](const TermPtr& t, const Environment& env) -> bool {
        ++rep.cases;
        CRational got, want;
        try {
            got = eval_external(t, env, view);
            want = s.z * eval_base(t, env);
        } catch (const DivisionByZero&) {
            return true;  // skip unevaluable samples
        }
        if (got == want) return true;
        std::map<std::string, std::string> binds{{"term", pretty_print(t)}};
        for (const auto& [k, v] : env) binds[k] = v.str();
        rep.failures.push_back(
            Failure{"wyz.homogeneity", binds, got.str(), want.str(), "external"});
        return false;
    };

    const Environment fixed_env{{"x", CRational(1)}, {"y", CRational(1)}};
    for (const TermPtr& t : pool) {
        if (!check_term(t, fixed_env)) return rep;
    }
    for (int i = 0; i < samples; ++i) {
        const TermPtr t = random_term(sampler, opts);
        const Environment env = random_environment(sampler, opts, NumberType::Rational);
        if (!check_term(t, env)) return rep;
    }
    return rep;
}

}  // namespace scalerep
