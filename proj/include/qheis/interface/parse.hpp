#pragma once

// Expression grammar:
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*        divisor must be central
//   unary    := '-' unary | power
//   power    := atom ('^' exponent)?
//   exponent := int | '-' int | '(' ['-'] int ['/' int] ')'
//   atom     := number | ident | '(' expr ')' | '[' expr ',' expr ']'
//
// Identifiers resolve to generators first, then to i, hbar, q, p and the
// declared opaque symbols.  Half-integer exponents are accepted on q and p.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "../ncpoly.hpp"
#include "../presentation.hpp"

namespace qheis {

struct ExprAst {
    enum class Kind { number, symbol, generator, power, product, reciprocal, sum, negate, commutator };

    Kind kind = Kind::number;
    BigInt value;              // number
    std::string name;          // symbol, generator
    Rational exponent;         // power
    std::vector<ExprAst> kids;

    friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

/// What identifiers mean while parsing.
struct SymbolContext {
    AlphabetPtr alphabet;
    std::vector<std::string> opaques;
    std::map<std::string, std::string> inverse_of;  // both directions

    static SymbolContext of(const Presentation& pres) {
        SymbolContext c{pres.alphabet, pres.opaque_symbols, {}};
        for (const auto& [g, gi] : pres.inverse_pairs) {
            c.inverse_of[g] = gi;
            c.inverse_of[gi] = g;
        }
        return c;
    }

    static SymbolContext of(AlphabetPtr alpha, std::vector<std::string> opaques = {}) {
        return SymbolContext{std::move(alpha), std::move(opaques), {}};
    }

    bool is_generator(const std::string& n) const { return alphabet && alphabet->find(n).has_value(); }
    bool is_central(const std::string& n) const {
        if (is_generator(n)) return false;
        if (n == "i" || n == "hbar" || n == "q" || n == "p") return true;
        return std::find(opaques.begin(), opaques.end(), n) != opaques.end();
    }
    std::vector<std::string> known_names() const {
        std::vector<std::string> v = alphabet ? alphabet->names() : std::vector<std::string>{};
        for (const char* c : {"i", "hbar", "q", "p"}) v.emplace_back(c);
        v.insert(v.end(), opaques.begin(), opaques.end());
        return v;
    }
};

inline std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, const SymbolContext& ctx) : s_(text), ctx_(ctx) {}

    ExprAst parse() {
        ExprAst e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    ExprAst expr() {
        ExprAst first = term();
        std::vector<ExprAst> parts{std::move(first)};
        for (;;) {
            if (eat('+')) {
                parts.push_back(term());
            } else if (eat('-')) {
                parts.push_back(ExprAst{ExprAst::Kind::negate, {}, {}, {}, {term()}});
            } else {
                break;
            }
        }
        if (parts.size() == 1) return std::move(parts.front());
        return ExprAst{ExprAst::Kind::sum, {}, {}, {}, std::move(parts)};
    }

    ExprAst term() {
        std::vector<ExprAst> parts{unary()};
        for (;;) {
            if (eat('*')) {
                parts.push_back(unary());
            } else if (eat('/')) {
                parts.push_back(ExprAst{ExprAst::Kind::reciprocal, {}, {}, {}, {unary()}});
            } else {
                skip();
                if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                         s_[pos_] == '['))
                    fail("missing '*' between factors");
                break;
            }
        }
        if (parts.size() == 1) return std::move(parts.front());
        return ExprAst{ExprAst::Kind::product, {}, {}, {}, std::move(parts)};
    }

    ExprAst unary() {
        if (eat('-')) return ExprAst{ExprAst::Kind::negate, {}, {}, {}, {unary()}};
        return power();
    }

    ExprAst power() {
        std::size_t base_pos = (skip(), pos_);
        ExprAst base = atom();
        if (!eat('^')) return base;
        Rational e = exponent();
        if (e.get_den() != 1) {
            bool half_ok = e.get_den() == 2 && base.kind == ExprAst::Kind::symbol && (base.name == "q" || base.name == "p");
            if (!half_ok) throw ParseError("fractional exponents are only allowed on q and p", base_pos);
        }
        return ExprAst{ExprAst::Kind::power, {}, {}, e, {std::move(base)}};
    }

    BigInt integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    Rational exponent() {
        if (eat('(')) {
            bool neg = eat('-');
            Rational r(integer());
            if (eat('/')) {
                BigInt d = integer();
                if (d == 0) fail("zero denominator in exponent");
                r /= Rational(d);
            }
            expect(')');
            r.canonicalize();
            return neg ? Rational(-r) : r;
        }
        bool neg = eat('-');
        Rational r(integer());
        return neg ? Rational(-r) : r;
    }

    ExprAst atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprAst e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            ExprAst a = expr();
            expect(',');
            ExprAst b = expr();
            expect(']');
            return ExprAst{ExprAst::Kind::commutator, {}, {}, {}, {std::move(a), std::move(b)}};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ExprAst{ExprAst::Kind::number, integer(), {}, {}, {}};
        if (c == '$') {
            // $q, $p: the central parameters even when a generator has that name
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == 'q' || s_[pos_] == 'p') &&
                (pos_ + 1 == s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '_')))
                return ExprAst{ExprAst::Kind::symbol, {}, std::string(1, s_[pos_++]), {}, {}};
            fail("'$' must be followed by q or p");
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id(s_.substr(start, pos_ - start));
            if (ctx_.is_generator(id)) return ExprAst{ExprAst::Kind::generator, {}, id, {}, {}};
            if (ctx_.is_central(id)) return ExprAst{ExprAst::Kind::symbol, {}, id, {}, {}};
            std::string msg = "unknown symbol '" + id + "'";
            std::string best;
            std::size_t best_d = 3;
            for (const auto& k : ctx_.known_names())
                if (auto d = edit_distance(id, k); d < best_d) {
                    best_d = d;
                    best = k;
                }
            if (!best.empty()) msg += "; did you mean '" + best + "'?";
            throw ParseError(msg, start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const SymbolContext& ctx_;
    std::size_t pos_ = 0;
};

inline bool needs_parens_in_product(const ExprAst& e) {
    return e.kind == ExprAst::Kind::sum || e.kind == ExprAst::Kind::negate;
}

} // namespace detail

inline ExprAst parse_ast(std::string_view text, const SymbolContext& ctx) { return detail::ExprParser(text, ctx).parse(); }

/// Canonical spelling of a tree; parse_ast(print_ast(t)) == t.
inline std::string print_ast(const ExprAst& e) {
    using K = ExprAst::Kind;
    auto atomic = [](const ExprAst& k) {
        return k.kind == K::number || k.kind == K::symbol || k.kind == K::generator || k.kind == K::commutator;
    };
    switch (e.kind) {
    case K::number:
        return e.value.get_str();
    case K::symbol:
    case K::generator:
        return e.name;
    case K::power: {
        std::string base = print_ast(e.kids[0]);
        if (!atomic(e.kids[0])) base = "(" + base + ")";
        const Rational& r = e.exponent;
        std::string ex;
        if (r.get_den() == 1)
            ex = r.get_num().get_str();
        else
            ex = "(" + r.get_num().get_str() + "/" + r.get_den().get_str() + ")";
        return base + "^" + ex;
    }
    case K::product: {
        std::string out;
        for (std::size_t k = 0; k < e.kids.size(); ++k) {
            const ExprAst& c = e.kids[k];
            if (c.kind == K::reciprocal) {
                const ExprAst& d = c.kids[0];
                bool wrap = d.kind == K::sum || d.kind == K::product || d.kind == K::negate || d.kind == K::reciprocal;
                out += "/" + (wrap ? "(" + print_ast(d) + ")" : print_ast(d));
                continue;
            }
            if (k) out += "*";
            bool wrap = detail::needs_parens_in_product(c) || c.kind == K::product;
            out += wrap ? "(" + print_ast(c) + ")" : print_ast(c);
        }
        return out;
    }
    case K::reciprocal:
        return "1/(" + print_ast(e.kids[0]) + ")";
    case K::sum: {
        std::string out;
        for (std::size_t k = 0; k < e.kids.size(); ++k) {
            const ExprAst& c = e.kids[k];
            if (k == 0) {
                out += c.kind == K::sum ? "(" + print_ast(c) + ")" : print_ast(c);
            } else if (c.kind == K::negate) {
                const ExprAst& inner = c.kids[0];
                bool wrap = inner.kind == K::sum || inner.kind == K::negate;
                out += " - " + (wrap ? "(" + print_ast(inner) + ")" : print_ast(inner));
            } else {
                out += " + " + (c.kind == K::sum ? "(" + print_ast(c) + ")" : print_ast(c));
            }
        }
        return out;
    }
    case K::negate: {
        const ExprAst& inner = e.kids[0];
        bool wrap = inner.kind == K::sum || inner.kind == K::product;
        return "-" + (wrap ? "(" + print_ast(inner) + ")" : print_ast(inner));
    }
    case K::commutator:
        return "[" + print_ast(e.kids[0]) + ", " + print_ast(e.kids[1]) + "]";
    }
    return {};
}

namespace detail {

inline std::optional<Coefficient> as_central(const NCPoly& a) {
    if (a.is_zero()) return Coefficient(0);
    if (a.size() == 1 && a.terms().begin()->first.empty()) return a.terms().begin()->second;
    return std::nullopt;
}

inline NCPoly lower(const ExprAst& e, const SymbolContext& ctx) {
    using K = ExprAst::Kind;
    const AlphabetPtr& alpha = ctx.alphabet;
    switch (e.kind) {
    case K::number:
        return NCPoly::constant(alpha, Coefficient(GaussRational(Rational(e.value))));
    case K::generator:
        return NCPoly::generator(alpha, e.name);
    case K::symbol: {
        if (e.name == "i") return NCPoly::constant(alpha, Coefficient::imaginary_unit());
        if (e.name == "hbar") return NCPoly::constant(alpha, Coefficient::hbar_power(1));
        if (e.name == "q") return NCPoly::constant(alpha, Coefficient::q_power(1));
        if (e.name == "p") return NCPoly::constant(alpha, Coefficient::p_power(1));
        return NCPoly::constant(alpha, Coefficient::variable(e.name));
    }
    case K::power: {
        const ExprAst& b = e.kids[0];
        const Rational& r = e.exponent;
        if (r.get_den() == 2) {
            int twice = static_cast<int>(r.get_num().get_si());
            return NCPoly::constant(alpha, b.name == "q" ? Coefficient::q_half_power(twice)
                                                         : Coefficient::p_half_power(twice));
        }
        if (!r.get_num().fits_sint_p()) throw ParseError("exponent out of range", 0);
        int k = static_cast<int>(r.get_num().get_si());
        NCPoly base = lower(b, ctx);
        if (k >= 0) return base.pow(static_cast<unsigned>(k));
        if (auto c = as_central(base)) {
            if (c->is_zero()) throw ParseError("negative power of zero", 0);
            return NCPoly::constant(alpha, c->pow(k));
        }
        if (b.kind == K::generator)
            if (auto it = ctx.inverse_of.find(b.name); it != ctx.inverse_of.end())
                return NCPoly::generator(alpha, it->second).pow(static_cast<unsigned>(-k));
        throw ParseError("negative power of a non-central expression", 0);
    }
    case K::product: {
        NCPoly acc = NCPoly::constant(alpha, Coefficient(1));
        for (const auto& c : e.kids) acc = acc * lower(c, ctx);
        return acc;
    }
    case K::reciprocal: {
        NCPoly d = lower(e.kids[0], ctx);
        auto c = as_central(d);
        if (!c) throw ParseError("division by a non-central expression", 0);
        if (c->is_zero()) throw ParseError("division by zero", 0);
        return NCPoly::constant(alpha, c->inverse());
    }
    case K::sum: {
        NCPoly acc(alpha);
        for (const auto& c : e.kids) acc += lower(c, ctx);
        return acc;
    }
    case K::negate:
        return -lower(e.kids[0], ctx);
    case K::commutator:
        return commutator(lower(e.kids[0], ctx), lower(e.kids[1], ctx));
    }
    return NCPoly(alpha);
}

} // namespace detail

inline NCPoly lower_ast(const ExprAst& e, const SymbolContext& ctx) { return detail::lower(e, ctx); }

inline NCPoly parse_expr(std::string_view text, const SymbolContext& ctx) {
    return lower_ast(parse_ast(text, ctx), ctx);
}

inline NCPoly parse_expr(std::string_view text, const Presentation& pres) {
    return parse_expr(text, SymbolContext::of(pres));
}

/// Parses an expression that must not involve generators.
inline Coefficient parse_coefficient(std::string_view text, const std::vector<std::string>& opaques = {}) {
    SymbolContext ctx = SymbolContext::of(make_alphabet({}), opaques);
    NCPoly a = parse_expr(text, ctx);
    auto c = detail::as_central(a);
    if (!c) throw ParseError("expected a central expression", 0);
    return *c;
}

} // namespace qheis
