#include "scalerep/term.hpp"

#include <cassert>
#include <cctype>
#include <cmath>
#include <set>

namespace scalerep {

// ---------------------------------------------------------------------------
// construction and structural equality

TermPtr Term::constant(CRational value) {
    Term t;
    t.kind_ = Kind::Constant;
    t.value_ = std::move(value);
    return std::make_shared<const Term>(std::move(t));
}

TermPtr Term::variable(std::string name) {
    Term t;
    t.kind_ = Kind::Variable;
    t.name_ = std::move(name);
    return std::make_shared<const Term>(std::move(t));
}

TermPtr Term::add(TermPtr lhs, TermPtr rhs) {
    Term t;
    t.kind_ = Kind::Add;
    t.lhs_ = std::move(lhs);
    t.rhs_ = std::move(rhs);
    return std::make_shared<const Term>(std::move(t));
}

TermPtr Term::sub(TermPtr lhs, TermPtr rhs) {
    Term t;
    t.kind_ = Kind::Sub;
    t.lhs_ = std::move(lhs);
    t.rhs_ = std::move(rhs);
    return std::make_shared<const Term>(std::move(t));
}

TermPtr Term::mul(TermPtr lhs, TermPtr rhs) {
    Term t;
    t.kind_ = Kind::Mul;
    t.lhs_ = std::move(lhs);
    t.rhs_ = std::move(rhs);
    return std::make_shared<const Term>(std::move(t));
}

TermPtr Term::div(TermPtr lhs, TermPtr rhs) {
    Term t;
    t.kind_ = Kind::Div;
    t.lhs_ = std::move(lhs);
    t.rhs_ = std::move(rhs);
    return std::make_shared<const Term>(std::move(t));
}

TermPtr Term::pow(TermPtr base, std::int64_t exponent) {
    if (exponent < 1) throw DomainError("power exponent must be >= 1");
    Term t;
    t.kind_ = Kind::Pow;
    t.lhs_ = std::move(base);
    t.exp_literal_ = exponent;
    return std::make_shared<const Term>(std::move(t));
}

TermPtr Term::pow(TermPtr base, std::string exponent_index) {
    Term t;
    t.kind_ = Kind::Pow;
    t.lhs_ = std::move(base);
    t.exp_is_index_ = true;
    t.name_ = std::move(exponent_index);
    return std::make_shared<const Term>(std::move(t));
}

TermPtr Term::sum(std::string index, std::int64_t lo, std::int64_t hi, TermPtr body) {
    if (lo > hi) throw DomainError("sum bounds must satisfy lower <= upper");
    Term t;
    t.kind_ = Kind::Sum;
    t.name_ = std::move(index);
    t.sum_lo_ = lo;
    t.sum_hi_ = hi;
    t.lhs_ = std::move(body);
    return std::make_shared<const Term>(std::move(t));
}

bool operator==(const Term& a, const Term& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case Term::Kind::Constant: return a.value_ == b.value_;
        case Term::Kind::Variable: return a.name_ == b.name_;
        case Term::Kind::Add:
        case Term::Kind::Sub:
        case Term::Kind::Mul:
        case Term::Kind::Div: return equal(a.lhs_, b.lhs_) && equal(a.rhs_, b.rhs_);
        case Term::Kind::Pow:
            if (a.exp_is_index_ != b.exp_is_index_) return false;
            if (a.exp_is_index_ ? a.name_ != b.name_ : a.exp_literal_ != b.exp_literal_)
                return false;
            return equal(a.lhs_, b.lhs_);
        case Term::Kind::Sum:
            return a.name_ == b.name_ && a.sum_lo_ == b.sum_lo_ && a.sum_hi_ == b.sum_hi_ &&
                   equal(a.lhs_, b.lhs_);
    }
    return false;
}

bool equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---------------------------------------------------------------------------
// tokenizer / parser

namespace {

enum class Tok {
    Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen,
    Assign, Semi, DotDot, End,
};

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;   // identifier name
    CRational value;    // number value
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        current_.pos = pos_;
        current_.text.clear();
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Tok::Plus; ++pos_; return;
            case '-': current_.kind = Tok::Minus; ++pos_; return;
            case '*': current_.kind = Tok::Star; ++pos_; return;
            case '/': current_.kind = Tok::Slash; ++pos_; return;
            case '^': current_.kind = Tok::Caret; ++pos_; return;
            case '(': current_.kind = Tok::LParen; ++pos_; return;
            case ')': current_.kind = Tok::RParen; ++pos_; return;
            case '=': current_.kind = Tok::Assign; ++pos_; return;
            case ';': current_.kind = Tok::Semi; ++pos_; return;
            default: break;
        }
        if (c == '.') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '.') {
                current_.kind = Tok::DotDot;
                pos_ += 2;
                return;
            }
            throw ParseError(pos_, "'..'");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t begin = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.kind = Tok::Ident;
            current_.text = std::string(text_.substr(begin, pos_ - begin));
            return;
        }
        throw ParseError(pos_, "a term token");
    }

    // digits [ '/' digits ] [ 'i' ]; the fraction slash binds only when the
    // next character is a digit, so "1/x" stays a division
    void lex_number() {
        std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        const Rational mag = Rational::parse(text_.substr(begin, pos_ - begin));
        bool imag = false;
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            imag = true;
            ++pos_;
        }
        current_.kind = Tok::Number;
        current_.value = imag ? CRational(Rational(0), mag) : CRational(mag);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    TermPtr parse() {
        TermPtr t = expr();
        expect(Tok::End, "end of input");
        return t;
    }

  private:
    TermPtr expr() {
        TermPtr t = product();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const bool plus = lex_.take().kind == Tok::Plus;
            TermPtr rhs = product();
            t = plus ? Term::add(t, rhs) : Term::sub(t, rhs);
        }
        return t;
    }

    TermPtr product() {
        TermPtr t = factor();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            const bool star = lex_.take().kind == Tok::Star;
            TermPtr rhs = factor();
            t = star ? Term::mul(t, rhs) : Term::div(t, rhs);
        }
        return t;
    }

    TermPtr factor() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            TermPtr operand = factor();
            if (operand->kind() == Term::Kind::Constant)
                return Term::constant(-operand->value());
            return Term::sub(Term::constant(CRational(0)), operand);
        }
        return power();
    }

    TermPtr power() {
        TermPtr base = atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        lex_.take();
        const Token e = lex_.peek();
        if (e.kind == Tok::Number) {
            lex_.take();
            if (!e.value.is_integer() || !e.value.re().is_positive())
                throw ParseError(e.pos, "a positive integer exponent");
            return Term::pow(base, static_cast<std::int64_t>(e.value.re().num()));
        }
        if (e.kind == Tok::Ident) {
            lex_.take();
            return Term::pow(base, e.text);
        }
        throw ParseError(e.pos, "an integer or sum-index exponent");
    }

    TermPtr atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number:
                lex_.take();
                return Term::constant(t.value);
            case Tok::Ident:
                lex_.take();
                if (t.text == "sum") return sum_tail(t.pos);
                return Term::variable(t.text);
            case Tok::LParen: {
                lex_.take();
                TermPtr inner = expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default: throw ParseError(t.pos, "a literal, variable, '(' or sum(...)");
        }
    }

    TermPtr sum_tail(std::size_t sum_pos) {
        expect(Tok::LParen, "'(' after sum");
        const Token idx = lex_.peek();
        if (idx.kind != Tok::Ident || idx.text == "sum")
            throw ParseError(idx.pos, "a sum index name");
        lex_.take();
        expect(Tok::Assign, "'='");
        const std::int64_t lo = integer("lower bound");
        expect(Tok::DotDot, "'..'");
        const std::int64_t hi = integer("upper bound");
        if (lo > hi) throw ParseError(sum_pos, "sum bounds with lower <= upper");
        expect(Tok::Semi, "';'");
        TermPtr body = expr();
        expect(Tok::RParen, "')'");
        return Term::sum(idx.text, lo, hi, body);
    }

    std::int64_t integer(const char* what) {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        const Token t = lex_.peek();
        if (t.kind != Tok::Number || !t.value.is_integer())
            throw ParseError(t.pos, std::string("an integer ") + what);
        lex_.take();
        const std::int64_t v = static_cast<std::int64_t>(t.value.re().num());
        return neg ? -v : v;
    }

    void expect(Tok k, const char* what) {
        if (lex_.peek().kind != k) throw ParseError(lex_.peek().pos, what);
        lex_.take();
    }

    Lexer lex_;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// printing

namespace {

// precedence: 1 add/sub, 2 mul/div (and signed constants), 3 pow, 4 atoms
int effective_prec(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Add:
        case Term::Kind::Sub: return 1;
        case Term::Kind::Mul:
        case Term::Kind::Div: return 2;
        case Term::Kind::Pow: return 3;
        case Term::Kind::Sum: return 4;
        case Term::Kind::Variable: return 4;
        case Term::Kind::Constant: {
            const CRational& v = t.value();
            if (!v.im().is_zero() && !v.re().is_zero()) return 4;  // rendered with parens
            const Rational& part = v.im().is_zero() ? v.re() : v.im();
            return part.is_negative() ? 2 : 4;
        }
    }
    return 4;
}

void print_rec(const Term& t, std::string& out);

void print_child(const TermPtr& child, int parent_prec, bool right, std::string& out) {
    const int cp = effective_prec(*child);
    const bool parens = cp < parent_prec || (right && cp == parent_prec);
    if (parens) out += '(';
    print_rec(*child, out);
    if (parens) out += ')';
}

void print_rec(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Constant: {
            const CRational& v = t.value();
            if (!v.im().is_zero() && !v.re().is_zero()) {
                // re-parses as a sum of two literals; value-equal, see header
                out += '(';
                out += v.str();
                out += ')';
            } else {
                out += v.str();
            }
            return;
        }
        case Term::Kind::Variable: out += t.name(); return;
        case Term::Kind::Add:
            print_child(t.lhs(), 1, false, out);
            out += " + ";
            print_child(t.rhs(), 1, true, out);
            return;
        case Term::Kind::Sub:
            print_child(t.lhs(), 1, false, out);
            out += " - ";
            print_child(t.rhs(), 1, true, out);
            return;
        case Term::Kind::Mul:
            print_child(t.lhs(), 2, false, out);
            out += " * ";
            print_child(t.rhs(), 2, true, out);
            return;
        case Term::Kind::Div:
            print_child(t.lhs(), 2, false, out);
            out += " / ";
            print_child(t.rhs(), 2, true, out);
            return;
        case Term::Kind::Pow:
            print_child(t.lhs(), 4, false, out);  // base must be atomic
            out += '^';
            out += t.exponent_is_index() ? t.exponent_index() : std::to_string(t.exponent());
            return;
        case Term::Kind::Sum:
            out += "sum(";
            out += t.name();
            out += '=';
            out += std::to_string(t.sum_lo());
            out += "..";
            out += std::to_string(t.sum_hi());
            out += "; ";
            print_rec(*t.lhs(), out);
            out += ')';
            return;
    }
}

}  // namespace

std::string pretty_print(const TermPtr& t) {
    std::string out;
    print_rec(*t, out);
    return out;
}

std::vector<std::string> free_variables(const TermPtr& t) {
    std::set<std::string> bound, seen;
    std::vector<std::string> order;
    struct Walk {
        std::set<std::string>& bound;
        std::set<std::string>& seen;
        std::vector<std::string>& order;
        void operator()(const Term& t) {
            switch (t.kind()) {
                case Term::Kind::Variable:
                    if (!bound.count(t.name()) && seen.insert(t.name()).second)
                        order.push_back(t.name());
                    return;
                case Term::Kind::Constant: return;
                case Term::Kind::Sum: {
                    const bool fresh = bound.insert(t.name()).second;
                    (*this)(*t.lhs());
                    if (fresh) bound.erase(t.name());
                    return;
                }
                case Term::Kind::Pow: (*this)(*t.lhs()); return;
                default:
                    (*this)(*t.lhs());
                    (*this)(*t.rhs());
                    return;
            }
        }
    } walk{bound, seen, order};
    walk(*t);
    return order;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

using IndexMap = std::map<std::string, std::int64_t>;

std::int64_t resolve_exponent(const Term& t, const IndexMap& idx) {
    std::int64_t e;
    if (t.exponent_is_index()) {
        auto it = idx.find(t.exponent_index());
        if (it == idx.end()) throw UnboundVariable(t.exponent_index());
        e = it->second;
    } else {
        e = t.exponent();
    }
    if (e < 1) throw DomainError("power exponent must be >= 1, got " + std::to_string(e));
    return e;
}

CRational lookup(const std::string& name, const Environment& env, const IndexMap& idx) {
    if (auto it = idx.find(name); it != idx.end()) return CRational(Rational(BigInt(it->second)));
    if (auto it = env.find(name); it != env.end()) return it->second;
    throw UnboundVariable(name);
}

CRational eval_base_rec(const Term& t, const Environment& env, IndexMap& idx) {
    switch (t.kind()) {
        case Term::Kind::Constant: return t.value();
        case Term::Kind::Variable: return lookup(t.name(), env, idx);
        case Term::Kind::Add:
            return eval_base_rec(*t.lhs(), env, idx) + eval_base_rec(*t.rhs(), env, idx);
        case Term::Kind::Sub:
            return eval_base_rec(*t.lhs(), env, idx) - eval_base_rec(*t.rhs(), env, idx);
        case Term::Kind::Mul:
            return eval_base_rec(*t.lhs(), env, idx) * eval_base_rec(*t.rhs(), env, idx);
        case Term::Kind::Div: {
            const CRational num = eval_base_rec(*t.lhs(), env, idx);
            const CRational den = eval_base_rec(*t.rhs(), env, idx);
            if (den.is_zero()) throw DivisionByZero(pretty_print(t.rhs()));
            return num / den;
        }
        case Term::Kind::Pow: {
            const std::int64_t e = resolve_exponent(t, idx);
            const CRational b = eval_base_rec(*t.lhs(), env, idx);
            CRational acc = b;
            for (std::int64_t k = 1; k < e; ++k) acc = acc * b;
            return acc;
        }
        case Term::Kind::Sum: {
            CRational acc;
            for (std::int64_t i = t.sum_lo(); i <= t.sum_hi(); ++i) {
                idx[t.name()] = i;
                const CRational v = eval_base_rec(*t.lhs(), env, idx);
                acc = (i == t.sum_lo()) ? v : acc + v;
            }
            idx.erase(t.name());
            return acc;
        }
    }
    throw Error("unreachable term kind");
}

CRational eval_ext_rec(const Term& t, const Environment& env, const ExternalView& view,
                       IndexMap& idx) {
    switch (t.kind()) {
        case Term::Kind::Constant: return view.inject(t.value());
        case Term::Kind::Variable: return view.inject(lookup(t.name(), env, idx));
        case Term::Kind::Add:
            return view.add(eval_ext_rec(*t.lhs(), env, view, idx),
                            eval_ext_rec(*t.rhs(), env, view, idx));
        case Term::Kind::Sub:
            return view.sub(eval_ext_rec(*t.lhs(), env, view, idx),
                            eval_ext_rec(*t.rhs(), env, view, idx));
        case Term::Kind::Mul:
            return view.mul(eval_ext_rec(*t.lhs(), env, view, idx),
                            eval_ext_rec(*t.rhs(), env, view, idx));
        case Term::Kind::Div: {
            const CRational num = eval_ext_rec(*t.lhs(), env, view, idx);
            const CRational den = eval_ext_rec(*t.rhs(), env, view, idx);
            if (den.is_zero()) throw DivisionByZero(pretty_print(t.rhs()));
            return view.div(num, den);
        }
        case Term::Kind::Pow: {
            const std::int64_t e = resolve_exponent(t, idx);
            const CRational b = eval_ext_rec(*t.lhs(), env, view, idx);
            CRational acc = b;
            for (std::int64_t k = 1; k < e; ++k) acc = view.mul(acc, b);
            return acc;
        }
        case Term::Kind::Sum: {
            CRational acc;
            for (std::int64_t i = t.sum_lo(); i <= t.sum_hi(); ++i) {
                idx[t.name()] = i;
                const CRational v = eval_ext_rec(*t.lhs(), env, view, idx);
                acc = (i == t.sum_lo()) ? v : view.add(acc, v);
            }
            idx.erase(t.name());
            return acc;
        }
    }
    throw Error("unreachable term kind");
}

ScaledValue eval_int_rec(const Term& t, const Environment& env, const StructureHandle& s,
                         IndexMap& idx) {
    switch (t.kind()) {
        case Term::Kind::Constant: return same_value(t.value(), s);
        case Term::Kind::Variable: return same_value(lookup(t.name(), env, idx), s);
        case Term::Kind::Add:
            return add_scaled(eval_int_rec(*t.lhs(), env, s, idx),
                              eval_int_rec(*t.rhs(), env, s, idx));
        case Term::Kind::Sub:
            return sub_scaled(eval_int_rec(*t.lhs(), env, s, idx),
                              eval_int_rec(*t.rhs(), env, s, idx));
        case Term::Kind::Mul:
            return mul_scaled(eval_int_rec(*t.lhs(), env, s, idx),
                              eval_int_rec(*t.rhs(), env, s, idx));
        case Term::Kind::Div: {
            const ScaledValue num = eval_int_rec(*t.lhs(), env, s, idx);
            const ScaledValue den = eval_int_rec(*t.rhs(), env, s, idx);
            if (den.internal().is_zero()) throw DivisionByZero(pretty_print(t.rhs()));
            return div_scaled(num, den);
        }
        case Term::Kind::Pow: {
            const std::int64_t e = resolve_exponent(t, idx);
            const ScaledValue b = eval_int_rec(*t.lhs(), env, s, idx);
            ScaledValue acc = b;
            for (std::int64_t k = 1; k < e; ++k) acc = mul_scaled(acc, b);
            return acc;
        }
        case Term::Kind::Sum: {
            std::optional<ScaledValue> acc;
            for (std::int64_t i = t.sum_lo(); i <= t.sum_hi(); ++i) {
                idx[t.name()] = i;
                const ScaledValue v = eval_int_rec(*t.lhs(), env, s, idx);
                acc = acc ? add_scaled(*acc, v) : v;
            }
            idx.erase(t.name());
            return *acc;
        }
    }
    throw Error("unreachable term kind");
}

}  // namespace

CRational eval_base(const TermPtr& t, const Environment& env) {
    IndexMap idx;
    return eval_base_rec(*t, env, idx);
}

CRational eval_external(const TermPtr& t, const Environment& env, const ExternalView& view) {
    IndexMap idx;
    return eval_ext_rec(*t, env, view, idx);
}

CRational eval_external(const TermPtr& t, const Environment& env, const StructureHandle& s) {
    return eval_external(t, env, ExternalView::of(s));
}

ScaledValue eval_internal(const TermPtr& t, const Environment& env, const StructureHandle& s) {
    IndexMap idx;
    return eval_int_rec(*t, env, s, idx);
}

VerdictTriple check_equation(const TermPtr& t, const TermPtr& u, const Environment& env,
                             const StructureHandle& s) {
    VerdictTriple v;
    v.base = eval_base(t, env) == eval_base(u, env);
    v.external = eval_external(t, env, s) == eval_external(u, env, s);
    v.internal = eval_internal(t, env, s) == eval_internal(u, env, s);
    return v;
}

VerdictTriple scaled_poly_root_check(const std::vector<CRational>& coeffs, const CRational& a,
                                     const StructureHandle& s) {
    if (s.type() != NumberType::Complex)
        throw TypeMismatch("polynomial root mapping requires a complex structure");

    VerdictTriple out;
    {
        CRational acc;
        CRational apow = 1;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            acc += coeffs[j] * apow;
            apow *= a;
        }
        out.base = acc.is_zero();
    }
    {
        const ExternalView view = ExternalView::of(s);
        CRational acc = view.zero();
        const CRational av = view.inject(a);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            CRational mono = view.inject(coeffs[j]);
            for (std::size_t k = 0; k < j; ++k) mono = view.mul(mono, av);
            acc = view.add(acc, mono);
        }
        out.external = acc == view.zero();
    }
    {
        const ScaledValue av = same_value(a, s);
        ScaledValue acc = same_value(CRational(0), s);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            ScaledValue mono = same_value(coeffs[j], s);
            for (std::size_t k = 0; k < j; ++k) mono = mul_scaled(mono, av);
            acc = add_scaled(acc, mono);
        }
        out.internal = acc.internal().is_zero();
    }
    return out;
}

SeriesValues power_series_eval(const std::vector<CRational>& coeffs, const CRational& x,
                               const StructureHandle& s) {
    if (coeffs.empty()) throw DomainError("power series needs at least one coefficient");

    SeriesValues out;
    {
        CRational acc;
        CRational xpow = x;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            acc += coeffs[j] * xpow;
            xpow *= x;
        }
        out.base = acc;
    }
    {
        const ExternalView view = ExternalView::of(s);
        CRational acc = view.zero();
        const CRational xv = view.inject(x);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            CRational mono = view.inject(coeffs[j]);
            for (std::size_t k = 0; k <= j; ++k) mono = view.mul(mono, xv);
            acc = view.add(acc, mono);
        }
        out.external = acc;
    }
    {
        const ScaledValue xv = same_value(x, s);
        std::optional<ScaledValue> acc;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            ScaledValue mono = same_value(coeffs[j], s);
            for (std::size_t k = 0; k <= j; ++k) mono = mul_scaled(mono, xv);
            acc = acc ? add_scaled(*acc, mono) : mono;
        }
        out.internal = acc->internal();
    }
    return out;
}

double analytic_scaled(AnalyticFn f, double x, double r) {
    if (r == 0.0) throw InvalidScale("analytic scaling needs r != 0");
    switch (f) {
        case AnalyticFn::Exp: return r * std::exp(x);
        case AnalyticFn::Sin: return r * std::sin(x);
        case AnalyticFn::SinSquared: return r * std::sin(x) * std::sin(x);
    }
    throw Error("unreachable analytic function");
}

}  // namespace scalerep
