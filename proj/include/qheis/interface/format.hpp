#pragma once

// Printers for coefficients and polynomials: plain text (re-parseable),
// LaTeX, and a loss-free JSON form.

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "../ncpoly.hpp"
#include "parse.hpp"

namespace qheis {

enum class Style { plain, latex, machine };

namespace detail {

inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Central variables in printing order: hbar, q, p, then opaque symbols.
inline int var_rank(const std::string& v) {
    if (v == var_hbar) return 0;
    if (v == var_sqrt_q) return 1;
    if (v == var_sqrt_p) return 2;
    return 3;
}

inline std::vector<CentralMonomial::Entry> ordered_entries(const CentralMonomial& m) {
    auto e = m.entries();
    std::stable_sort(e.begin(), e.end(), [](const auto& a, const auto& b) {
        int ra = var_rank(a.first), rb = var_rank(b.first);
        return ra != rb ? ra < rb : a.first < b.first;
    });
    return e;
}

// Set while printing over an alphabet that has a generator named q or p, so
// the central parameter is written $q / $p in plain text.
struct CentralSpelling {
    bool escape_q = false, escape_p = false;
};

inline CentralSpelling& central_spelling() {
    thread_local CentralSpelling s;
    return s;
}

class SpellingScope {
public:
    explicit SpellingScope(const Alphabet& alpha, bool latex) : saved_(central_spelling()) {
        central_spelling() = {!latex && alpha.find("q").has_value(), !latex && alpha.find("p").has_value()};
    }
    ~SpellingScope() { central_spelling() = saved_; }
    SpellingScope(const SpellingScope&) = delete;
    SpellingScope& operator=(const SpellingScope&) = delete;

private:
    CentralSpelling saved_;
};

inline std::string var_power(const std::string& v, int e, bool latex) {
    std::string name;
    bool halves = v == var_sqrt_q || v == var_sqrt_p;
    if (v == var_hbar)
        name = latex ? "\\hbar" : "hbar";
    else if (v == var_sqrt_q)
        name = central_spelling().escape_q ? "$q" : "q";
    else if (v == var_sqrt_p)
        name = central_spelling().escape_p ? "$p" : "p";
    else
        name = v;
    std::string ex;
    if (halves && e % 2 != 0) {
        ex = latex ? std::to_string(e) + "/2" : "(" + std::to_string(e) + "/2)";
    } else {
        int k = halves ? e / 2 : e;
        if (k == 1) return name;
        ex = std::to_string(k);
    }
    if (latex) return name + "^{" + ex + "}";
    return name + "^" + ex;
}

inline std::string monomial_str(const CentralMonomial& m, bool latex) {
    std::string out;
    for (const auto& [v, e] : ordered_entries(m)) {
        if (!out.empty()) out += latex ? (v == var_hbar ? "" : " ") : "*";
        out += var_power(v, e, latex);
    }
    return out;
}

// Ordered terms of a central polynomial: descending, hbar most significant.
inline std::vector<std::pair<CentralMonomial, GaussRational>> ordered_terms(const CentralPoly& p) {
    std::vector<std::pair<CentralMonomial, GaussRational>> t(p.terms().begin(), p.terms().end());
    auto key = [](const CentralMonomial& m) {
        std::vector<std::pair<int, std::pair<std::string, int>>> k;
        for (const auto& [v, e] : m.entries()) k.push_back({var_rank(v), {v, e}});
        std::sort(k.begin(), k.end());
        return k;
    };
    std::stable_sort(t.begin(), t.end(), [&](const auto& a, const auto& b) {
        auto ka = key(a.first), kb = key(b.first);
        // compare exponent vectors variable by variable in printing order
        std::size_t ia = 0, ib = 0;
        while (ia < ka.size() || ib < kb.size()) {
            std::pair<int, std::string> va = ia < ka.size() ? std::pair{ka[ia].first, ka[ia].second.first}
                                                            : std::pair{99, std::string()};
            std::pair<int, std::string> vb = ib < kb.size() ? std::pair{kb[ib].first, kb[ib].second.first}
                                                            : std::pair{99, std::string()};
            int ea, eb;
            if (va < vb) {
                ea = ka[ia].second.second;
                eb = 0;
                ++ia;
            } else if (vb < va) {
                ea = 0;
                eb = kb[ib].second.second;
                ++ib;
            } else {
                ea = ka[ia].second.second;
                eb = kb[ib].second.second;
                ++ia;
                ++ib;
            }
            if (ea != eb) return ea > eb;
        }
        return false;
    });
    return t;
}

inline bool is_negative(const GaussRational& g) {
    if (g.is_real()) return g.re() < 0;
    if (g.is_imaginary()) return g.im() < 0;
    return false;
}

inline std::string gauss_str(const GaussRational& g, bool latex) {
    const char* i_name = "i";
    if (g.is_real()) return rational_str(g.re());
    if (g.is_imaginary()) {
        if (g.im() == 1) return i_name;
        if (g.im() == -1) return std::string("-") + i_name;
        return rational_str(g.im()) + (latex ? "" : "*") + i_name;
    }
    std::string im = g.im() == 1 ? std::string(i_name)
                   : g.im() == -1 ? std::string("-") + i_name
                                  : rational_str(g.im()) + (latex ? "" : "*") + i_name;
    std::string sep = g.im() < 0 ? " - " : " + ";
    if (g.im() < 0) im = im.substr(1);
    return "(" + rational_str(g.re()) + sep + im + ")";
}

// A central polynomial as a sum, in printing order.
inline std::string central_sum(const CentralPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered_terms(p)) {
        GaussRational cc = c;
        bool neg = is_negative(cc);
        if (neg) cc = -cc;
        std::string piece;
        std::string mono = monomial_str(m, latex);
        if (mono.empty()) {
            piece = gauss_str(cc, latex);
        } else if (cc.is_one()) {
            piece = mono;
        } else {
            piece = gauss_str(cc, latex) + (latex ? "" : "*") + mono;
        }
        if (first)
            out += neg ? "-" + piece : piece;
        else
            out += (neg ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

// Factors a central polynomial as  sign * scalar * monomial * rest  where
// rest has no common monomial factor and is printed in parentheses when it
// has more than one term.
struct Factored {
    bool negative = false;
    GaussRational scalar{1};
    CentralMonomial monomial;
    CentralPoly rest{1};
};

inline Factored factor_content(const CentralPoly& p) {
    Factored f;
    if (p.is_zero()) {
        f.rest = CentralPoly();
        return f;
    }
    std::map<std::string, std::pair<int, int>> range;  // var -> (min, max)
    for (const auto& v : p.variables()) range[v] = {INT32_MAX, INT32_MIN};
    for (const auto& [m, c] : p.terms())
        for (auto& [v, mm] : range) {
            int e = m.exponent(v);
            mm.first = std::min(mm.first, e);
            mm.second = std::max(mm.second, e);
        }
    std::vector<CentralMonomial::Entry> common;
    for (const auto& [v, mm] : range) {
        if (mm.first > 0) common.emplace_back(v, mm.first);
        else if (mm.second < 0) common.emplace_back(v, mm.second);
    }
    f.monomial = CentralMonomial::from_entries(common);

    bool all_imag = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.is_imaginary(); });
    GaussRational scale = all_imag ? GaussRational::imaginary_unit() : GaussRational(1);
    if (p.is_monomial()) scale = p.terms().begin()->second;
    CentralPoly rest = p.scaled(scale.inverse(), f.monomial.inverse());
    auto first = ordered_terms(rest).front().second;
    if (is_negative(first)) {
        scale = -scale;
        rest = -rest;
    }
    f.negative = is_negative(scale);
    f.scalar = f.negative ? -scale : scale;
    f.rest = rest;
    return f;
}

} // namespace detail

namespace detail {

// LaTeX factors are juxtaposed; a space only where two letters would merge.
inline std::string latex_glue(const std::string& left, const std::string& right) {
    bool l = !left.empty() && std::isalnum(static_cast<unsigned char>(left.back()));
    bool r = !right.empty() && std::isalpha(static_cast<unsigned char>(right.front()));
    return l && r ? " " : "";
}

} // namespace detail

/// Plain or LaTeX rendering of a coefficient as a product of factors; the
/// bool is set when the whole coefficient carries a leading minus sign.
inline std::vector<std::string> coefficient_factors(const Coefficient& c, bool latex, bool& negative) {
    std::vector<std::string> factors;
    detail::Factored f = detail::factor_content(c.numerator());
    negative = f.negative;
    if (!f.scalar.is_one()) factors.push_back(detail::gauss_str(f.scalar, latex));
    if (!f.monomial.is_one()) factors.push_back(detail::monomial_str(f.monomial, latex));
    if (!f.rest.is_one()) {
        std::string body = detail::central_sum(f.rest, latex);
        factors.push_back(f.rest.size() > 1 || !c.denominator().is_one() ? "(" + body + ")" : body);
    }
    if (!c.denominator().is_one()) {
        std::string den = detail::central_sum(c.denominator(), latex);
        if (latex) {
            std::string num;
            for (const auto& s : factors) num += s;
            factors.assign(1, "\\frac{" + (num.empty() ? std::string("1") : num) + "}{" + den + "}");
        } else {
            if (factors.empty()) factors.push_back("1");
            factors.back() += "/(" + den + ")";
        }
    }
    return factors;
}

inline std::string format_coefficient(const Coefficient& c, Style style = Style::plain) {
    if (c.is_zero()) return "0";
    bool latex = style == Style::latex;
    bool neg = false;
    auto fs = coefficient_factors(c, latex, neg);
    std::string out = neg ? "-" : "";
    if (fs.empty()) return out + "1";
    for (std::size_t k = 0; k < fs.size(); ++k)
        out += (k ? (latex ? detail::latex_glue(fs[k - 1], fs[k]) : "*") : "") + fs[k];
    return out;
}

inline std::string latex_generator(const Generator& g) {
    static const std::map<std::string, std::string> greek{{"Lambda", "\\Lambda"}, {"lambda", "\\lambda"},
                                                          {"Psi", "\\Psi"},       {"Phi", "\\Phi"},
                                                          {"Pi", "\\Pi"},         {"Delta", "\\Delta"}};
    std::string base = g.base;
    bool inverse = false, bar = false;
    auto strip = [&](const std::string& suffix) {
        if (base.size() > suffix.size() && base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
            base.erase(base.size() - suffix.size());
            return true;
        }
        return false;
    };
    if (g.name.size() > 4 && g.name.compare(g.name.size() - 4, 4, "_inv") == 0) {
        base = g.name.substr(0, g.name.size() - 4);
        inverse = true;
    } else {
        bar = strip("bar");
    }
    if (auto it = greek.find(base); it != greek.end()) base = it->second;
    std::string out = "\\hat{" + base + "}";
    if (bar) out = "\\overline{" + out + "}";
    if (g.index && !inverse) out += "_{" + std::to_string(*g.index) + "}";
    if (inverse) out += "^{-1}";
    return out;
}

namespace detail {

inline std::string word_str(const Alphabet& alpha, const Word& w, bool latex) {
    std::string out;
    for (std::size_t k = 0; k < w.size();) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        const Generator& g = alpha.generator(w[k]);
        if (latex) {
            std::string gl = latex_generator(g);
            if (run > 1) {
                bool has_sup = gl.size() > 5 && gl.compare(gl.size() - 5, 5, "^{-1}") == 0;
                gl = has_sup ? "(" + gl + ")^{" + std::to_string(run) + "}" : gl + "^{" + std::to_string(run) + "}";
            }
            out += gl;
        } else {
            if (!out.empty()) out += "*";
            out += g.name;
            if (run > 1) out += "^" + std::to_string(run);
        }
        k += run;
    }
    return out;
}

inline nlohmann::json gauss_json(const GaussRational& g) { return {{"re", g.re().get_str()}, {"im", g.im().get_str()}}; }

inline nlohmann::json central_json(const CentralPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json vars = nlohmann::json::object();
        for (const auto& [v, e] : m.entries()) vars[v] = e;
        arr.push_back({{"coeff", gauss_json(c)}, {"vars", vars}});
    }
    return arr;
}

inline GaussRational gauss_from_json(const nlohmann::json& j) {
    return GaussRational(Rational(j.at("re").get<std::string>()), Rational(j.at("im").get<std::string>()));
}

inline CentralPoly central_from_json(const nlohmann::json& j) {
    CentralPoly p;
    for (const auto& t : j) {
        std::vector<CentralMonomial::Entry> es;
        for (const auto& [v, e] : t.at("vars").items()) es.emplace_back(v, e.get<int>());
        p.add_term(CentralMonomial::from_entries(es), gauss_from_json(t.at("coeff")));
    }
    return p;
}

} // namespace detail

inline nlohmann::json coefficient_json(const Coefficient& c) {
    return {{"num", detail::central_json(c.numerator())}, {"den", detail::central_json(c.denominator())}};
}

inline Coefficient coefficient_from_json(const nlohmann::json& j) {
    return Coefficient::fraction(detail::central_from_json(j.at("num")), detail::central_from_json(j.at("den")));
}

inline nlohmann::json poly_json(const NCPoly& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        nlohmann::json w = nlohmann::json::array();
        for (Letter l : it->first) w.push_back(a.alphabet()->name(l));
        terms.push_back({{"word", w}, {"coeff", coefficient_json(it->second)}});
    }
    return {{"generators", a.alphabet()->names()}, {"terms", terms}};
}

/// Inverse of poly_json.  The alphabet is rebuilt from the document unless
/// one with the same generator list is supplied.
inline NCPoly poly_from_json(const nlohmann::json& j, AlphabetPtr alpha = nullptr) {
    try {
        auto names = j.at("generators").get<std::vector<std::string>>();
        if (!alpha) alpha = make_alphabet(names);
        else if (alpha->names() != names) throw AlphabetError("document alphabet differs from the supplied one");
        NCPoly p(alpha);
        for (const auto& t : j.at("terms")) {
            Word w;
            for (const auto& n : t.at("word")) w.push_back(alpha->letter(n.get<std::string>()));
            p.add_term(w, coefficient_from_json(t.at("coeff")));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("machine polynomial: ") + e.what());
    }
}

/// Deterministic rendering, terms in descending order.
inline std::string format_expr(const NCPoly& a, Style style = Style::plain) {
    if (style == Style::machine) return a.is_zero() ? "0" : poly_json(a).dump();
    if (a.is_zero()) return "0";
    bool latex = style == Style::latex;
    detail::SpellingScope spelling(*a.alphabet(), latex);
    std::string out;
    bool first = true;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        bool neg = false;
        std::vector<std::string> fs = coefficient_factors(c, latex, neg);
        std::string ws = detail::word_str(*a.alphabet(), w, latex);
        if (!ws.empty()) fs.push_back(ws);
        std::string body;
        if (fs.empty()) body = "1";
        for (std::size_t k = 0; k < fs.size(); ++k) {
            if (k) body += latex ? detail::latex_glue(fs[k - 1], fs[k]) : "*";
            body += fs[k];
        }
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace qheis
