#pragma once

// Catalog of q-deformed Heisenberg-type algebras, the unified algebra with
// dynamical functions, index schema expansion and Ore data extraction.

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "interface/parse.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"

namespace qheis {

using FamilyParams = std::map<std::string, std::string>;

// ---------------------------------------------------------------------------
// Schema expansion

using IndexRanges = std::vector<std::pair<std::string, std::vector<int>>>;

/// Expands a relation template such as "x_n*p_m - p_m*x_n - i*hbar*delta(n,m)".
/// A generator suffix that is a single lowercase letter is an index
/// variable; delta(a,b) is the Kronecker delta.  Tuples giving the zero
/// polynomial, or the negative of an earlier relation, are skipped.
inline std::vector<Relation> expand_schema(const std::string& label, const std::string& templ, const IndexRanges& ranges,
                                           const SymbolContext& ctx) {
    std::map<std::string, std::size_t> slot;
    for (std::size_t k = 0; k < ranges.size(); ++k) {
        if (ranges[k].first.size() != 1 || !std::islower(static_cast<unsigned char>(ranges[k].first[0])))
            throw ParamError("index variable '" + ranges[k].first + "' must be a single lowercase letter");
        if (ranges[k].second.empty()) throw ParamError("index '" + ranges[k].first + "' has an empty range");
        slot[ranges[k].first] = k;
    }
    static const std::regex index_ref(R"(([A-Za-z][A-Za-z0-9]*)_([a-z])\b)");
    static const std::regex delta_ref(R"(delta\(\s*([a-z])\s*,\s*([a-z])\s*\))");
    for (std::sregex_iterator it(templ.begin(), templ.end(), index_ref), end; it != end; ++it)
        if (!slot.count((*it)[2])) throw ParamError("template '" + label + "': unbound index '" + (*it)[2].str() + "'");
    for (std::sregex_iterator it(templ.begin(), templ.end(), delta_ref), end; it != end; ++it)
        for (int g : {1, 2})
            if (!slot.count((*it)[g])) throw ParamError("template '" + label + "': unbound index '" + (*it)[g].str() + "'");

    std::vector<Relation> out;
    std::vector<int> tuple(ranges.size());
    std::vector<std::size_t> pos(ranges.size(), 0);
    for (;;) {
        for (std::size_t k = 0; k < ranges.size(); ++k) tuple[k] = ranges[k].second[pos[k]];
        auto value = [&](const std::string& var) { return tuple[slot.at(var)]; };

        std::string text;
        std::string rest = templ;
        std::smatch m;
        while (std::regex_search(rest, m, delta_ref)) {
            text += m.prefix().str() + (value(m[1]) == value(m[2]) ? "1" : "0");
            rest = m.suffix().str();
        }
        text += rest;
        std::string expanded;
        rest = text;
        while (std::regex_search(rest, m, index_ref)) {
            expanded += m.prefix().str() + m[1].str() + "_" + std::to_string(value(m[2]));
            rest = m.suffix().str();
        }
        expanded += rest;

        NCPoly poly = parse_expr(expanded, ctx);
        bool duplicate = std::any_of(out.begin(), out.end(), [&](const Relation& r) {
            return r.poly == poly || r.poly == -poly;
        });
        if (!poly.is_zero() && !duplicate) {
            std::string lab = label + "[";
            for (std::size_t k = 0; k < tuple.size(); ++k) lab += (k ? "," : "") + std::to_string(tuple[k]);
            out.push_back({lab + "]", std::move(poly)});
        }

        std::size_t k = 0;
        while (k < ranges.size() && ++pos[k] == ranges[k].second.size()) pos[k++] = 0;
        if (k == ranges.size()) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

struct FamilyInfo {
    std::string id;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> params;  // name, default
};

inline const std::vector<FamilyInfo>& family_list() {
    static const std::vector<FamilyInfo> list{
        {"classical", "canonical commutation relations in dim dimensions", {{"dim", "3"}}},
        {"wess", "q-deformed Heisenberg algebra with scaling generator Lambda", {{"variant", "definition"}}},
        {"schmudgen", "q-Heisenberg algebra with invertible u", {{"variant", "proposition"}}},
        {"wess_schwenk", "q-Heisenberg algebra over the quantum plane", {}},
        {"gaddis", "quantum Heisenberg enveloping algebra H_{p,q}", {{"p", "p"}, {"variant", "corrected"}}},
        {"gha", "generalized Heisenberg algebra H(f)", {{"f", "h^2"}}},
        {"q_gha", "q-generalized Heisenberg algebra H_q(f,g)", {{"f", "h^2"}, {"g", "h"}}},
        {"qhbar", "q-hbar Heisenberg algebra", {}},
        {"qhbar_quantization", "q-hbar Heisenberg algebra quantization with opaque D", {}},
    };
    return list;
}

namespace detail {

struct CatalogBuilder {
    Presentation pres;

    CatalogBuilder(std::string name, std::vector<std::string> gens) {
        pres.name = std::move(name);
        pres.alphabet = make_alphabet(gens);
    }

    SymbolContext ctx() const { return SymbolContext::of(pres); }

    void rel(const std::string& label, const std::string& text) {
        pres.relations.push_back({label, parse_expr(text, ctx())});
    }
};

inline std::string param_or(const FamilyParams& params, const std::string& key, const std::string& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

inline void check_params(const std::string& id, const FamilyParams& params, std::vector<std::string> allowed) {
    allowed.push_back("drop");
    for (const auto& [k, v] : params)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw ParamError("family '" + id + "' has no parameter '" + k + "'");
}

inline int parse_int_param(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        int r = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ParamError("parameter '" + key + "' must be an integer, got '" + v + "'");
    }
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// A univariate polynomial in the generator h; returns its degree.
inline std::size_t require_polynomial_in(const NCPoly& f, const std::string& gen, const std::string& what) {
    Letter h = f.alphabet()->letter(gen);
    std::size_t deg = 0;
    for (const auto& entry : f.terms()) {
        const Word& w = entry.first;
        for (Letter l : w)
            if (l != h) throw ParamError(what + " must be a polynomial in " + gen + " alone");
        deg = std::max(deg, w.size());
    }
    return deg;
}

inline NCPoly parse_param(const std::string& key, const std::string& text, const SymbolContext& ctx) {
    try {
        return parse_expr(text, ctx);
    } catch (const ParseError& e) {
        throw ParamError("parameter '" + key + "': " + e.what());
    }
}

inline Presentation build_family(const std::string& id, const FamilyParams& params) {
    if (id == "classical") {
        check_params(id, params, {"dim"});
        int dim = parse_int_param("dim", param_or(params, "dim", "3"));
        if (dim < 1 || dim > 9) throw ParamError("dim must be between 1 and 9");
        std::vector<std::string> gens;
        std::vector<int> idx;
        for (int k = 1; k <= dim; ++k) {
            gens.push_back("x_" + std::to_string(k));
            idx.push_back(k);
        }
        for (int k = 1; k <= dim; ++k) gens.push_back("p_" + std::to_string(k));
        CatalogBuilder b("classical", gens);
        IndexRanges r{{"n", idx}, {"m", idx}};
        auto& rels = b.pres.relations;
        for (const auto& [label, templ] : {std::pair{"xp", "x_n*p_m - p_m*x_n - i*hbar*delta(n,m)"},
                                           std::pair{"xx", "x_n*x_m - x_m*x_n"}, std::pair{"pp", "p_n*p_m - p_m*p_n"}}) {
            auto part = expand_schema(label, templ, r, b.ctx());
            rels.insert(rels.end(), part.begin(), part.end());
        }
        return b.pres;
    }
    if (id == "wess") {
        check_params(id, params, {"variant"});
        std::string variant = param_or(params, "variant", "definition");
        CatalogBuilder b("wess", {"Lambda_inv", "Lambda", "p", "x"});
        b.pres.inverse_pairs = {{"Lambda", "Lambda_inv"}};
        if (variant == "definition")
            b.rel("xp", "q^(1/2)*x*p - q^(-1/2)*p*x - i*Lambda*hbar");
        else if (variant == "remark")
            b.rel("xp", "x*p - q^-1*p*x - i*hbar*Lambda*q^(-1/2)");
        else
            throw ParamError("wess variant must be 'definition' or 'remark'");
        b.rel("Lambda_x", "Lambda*x - q^-1*x*Lambda");
        b.rel("Lambda_p", "Lambda*p - q*p*Lambda");
        b.rel("x_Lambda_inv", "x*Lambda_inv - q^-1*Lambda_inv*x");
        b.rel("p_Lambda_inv", "p*Lambda_inv - q*Lambda_inv*p");
        b.pres.metadata = {"adjoint: bar(p) = p, bar(x) = x, bar(Lambda) = Lambda^-1 (not enforced)",
                           "q real, q != 0"};
        return b.pres;
    }
    if (id == "schmudgen") {
        check_params(id, params, {"variant"});
        std::string variant = param_or(params, "variant", "proposition");
        CatalogBuilder b("schmudgen", {"u_inv", "u", "x", "p"});
        b.pres.inverse_pairs = {{"u", "u_inv"}};
        b.rel("u_p", "u*p - q*p*u");
        b.rel("u_x", "u*x - q^-1*x*u");
        b.rel("x_u_inv", "x*u_inv - q^-1*u_inv*x");
        b.rel("p_u_inv", "p*u_inv - q*u_inv*p");
        if (variant == "definition") {
            b.rel("px_u", "p*x - q*x*p - i*(q^(3/2) - q^(-1/2))*u*hbar");
            b.rel("xp_u_inv", "x*p - q*p*x + i*(q^(3/2) - q^(-1/2))*u_inv*hbar");
            b.pres.interreduce = true;
        } else if (variant == "proposition") {
            b.rel("px", "p*x + i*q^(-1/2)*u*hbar - i*q^(1/2)*u_inv*hbar");
            b.rel("xp", "x*p + i*q^(1/2)*u*hbar - i*q^(-1/2)*u_inv*hbar");
        } else if (variant == "printed") {
            b.rel("px", "p*x - i*q^(1/2)*u + i*q^(-1/2)*u_inv*hbar");
            b.rel("xp", "x*p - i*q^(-1/2)*u_inv + i*q^(1/2)*u*hbar");
        } else {
            throw ParamError("schmudgen variant must be 'proposition', 'definition' or 'printed'");
        }
        b.pres.metadata = {"q positive real, q != 1 (not enforced)"};
        return b.pres;
    }
    if (id == "wess_schwenk") {
        check_params(id, params, {});
        CatalogBuilder b("wess_schwenk", {"x", "xbar", "p"});
        b.rel("px", "p*x - q*x*p + i*hbar");
        b.rel("pxbar", "p*xbar - q^-1*xbar*p + i*q^-1*hbar");
        b.rel("xxbar", "x*xbar - q*xbar*x");
        return b.pres;
    }
    if (id == "gaddis") {
        check_params(id, params, {"p", "variant"});
        CatalogBuilder b("gaddis", {"x", "z", "y"});
        std::string pp = param_or(params, "p", "p");
        std::string variant = param_or(params, "variant", "corrected");
        NCPoly pv = parse_param("p", pp, b.ctx());
        if (pv.max_length() > 0 || pv.is_zero()) throw ParamError("gaddis parameter p must be a nonzero scalar");
        NCPoly x = b.pres.gen("x"), y = b.pres.gen("y"), z = b.pres.gen("z");
        if (variant == "printed") {
            b.rel("zx", "z*x - q^-1*x*z");
        } else if (variant == "corrected") {
            // z*x = p^-1*x*z: the form under which the overlap y*z*x resolves
            Coefficient pinv = pv.coefficient(Word{}).inverse();
            b.pres.relations.push_back({"zx", z * x - pinv * x * z});
        } else {
            throw ParamError("gaddis variant must be 'printed' or 'corrected'");
        }
        b.pres.relations.push_back({"zy", z * y - pv * y * z});
        b.rel("yx", "y*x - q*x*y - hbar*z");
        b.pres.parameters["p"] = pp;
        if (variant != "corrected") b.pres.parameters["variant"] = variant;
        b.pres.metadata = {"p, q nonzero"};
        return b.pres;
    }
    if (id == "gha" || id == "q_gha") {
        bool deformed = id == "q_gha";
        check_params(id, params, deformed ? std::vector<std::string>{"f", "g"} : std::vector<std::string>{"f"});
        CatalogBuilder b(id, {"h", "x", "y"});
        std::string fs = param_or(params, "f", "h^2");
        NCPoly f = parse_param("f", fs, b.ctx());
        std::size_t deg = require_polynomial_in(f, "h", "f");
        NCPoly h = b.pres.gen("h"), x = b.pres.gen("x"), y = b.pres.gen("y");
        NCPoly hb = b.pres.scalar(Coefficient::hbar_power(1));
        b.pres.relations.push_back({"hx", h * x - x * f});
        b.pres.relations.push_back({"yh", y * h - f * y});
        if (deformed) {
            std::string gs = param_or(params, "g", "h");
            NCPoly g = parse_param("g", gs, b.ctx());
            require_polynomial_in(g, "h", "g");
            b.pres.relations.push_back({"yx", y * x - Coefficient::q_power(1) * x * y - hb * g});
            b.pres.parameters["g"] = gs;
        } else {
            b.pres.relations.push_back({"yx", y * x - x * y - hb * f + hb * h});
        }
        b.pres.parameters["f"] = fs;
        b.pres.order = OrderSpec{OrderSpec::Kind::weighted, {"h"}, {"x"}, {"y"}, static_cast<int>(std::max<std::size_t>(deg, 1) + 1)};
        return b.pres;
    }
    if (id == "qhbar") {
        check_params(id, params, {});
        CatalogBuilder b("qhbar", {"x_1", "p_1"});
        b.rel("px", "p_1*x_1 - q*x_1*p_1 + i*hbar*q^(1/2)");
        b.pres.metadata = {"q complex, q != 0"};
        return b.pres;
    }
    if (id == "qhbar_quantization") {
        check_params(id, params, {});
        CatalogBuilder b("qhbar_quantization", {"x_1", "p_1"});
        b.pres.opaque_symbols = {"D"};
        b.rel("xp", "x_1*p_1 - q*p_1*x_1 - i*hbar*D");
        b.pres.metadata = {"D stands for an arbitrary function of q"};
        return b.pres;
    }
    std::string known;
    for (const auto& f : family_list()) known += (known.empty() ? "" : ", ") + f.id;
    throw UnknownFamily("'" + id + "' (known: " + known + ")");
}

} // namespace detail

/// Removes the relations named in a comma-separated list.
inline Presentation drop_relations(Presentation pres, const std::string& labels) {
    for (const auto& lab : detail::split_list(labels)) {
        auto it = std::find_if(pres.relations.begin(), pres.relations.end(), [&](const Relation& r) { return r.label == lab; });
        if (it == pres.relations.end()) throw ParamError("cannot drop unknown relation '" + lab + "'");
        pres.relations.erase(it);
    }
    return pres;
}

inline Presentation catalog(const std::string& id, const FamilyParams& params = {}) {
    Presentation pres = detail::build_family(id, params);
    if (auto it = params.find("drop"); it != params.end()) pres = drop_relations(std::move(pres), it->second);
    pres.validate();
    return pres;
}

// ---------------------------------------------------------------------------
// Unified algebra

/// Parameters of the unified algebra.  The dynamical functions are written
/// over the unified alphabet: extra generators (lowest precedence), then
/// x_a, y_l, p_b for the index ranges.
struct UnifiedParams {
    int n = 1, m = 1, l = 1;
    std::string psi = "1", pi = "0", phi = "0";
    std::vector<int> x_range{1}, y_range{1}, p_range{1};
    std::vector<std::string> extra_generators;
    std::vector<std::pair<std::string, std::string>> inverse_pairs;
    std::vector<std::string> opaques;
    // Which families of relations to emit.
    bool with_nh1 = true, with_nh2 = true, with_nh3 = true;
};

inline std::vector<std::string> unified_generators(const UnifiedParams& u) {
    std::vector<std::string> gens = u.extra_generators;
    for (int a : u.x_range) gens.push_back("x_" + std::to_string(a));
    for (int a : u.y_range) gens.push_back("y_" + std::to_string(a));
    for (int a : u.p_range) gens.push_back("p_" + std::to_string(a));
    return gens;
}

inline Presentation unified(const UnifiedParams& u) {
    Presentation pres;
    pres.name = "unified";
    pres.alphabet = make_alphabet(unified_generators(u));
    pres.inverse_pairs = u.inverse_pairs;
    pres.opaque_symbols = u.opaques;
    SymbolContext ctx = SymbolContext::of(pres);
    NCPoly psi = detail::parse_param("psi", u.psi, ctx);
    NCPoly pi = detail::parse_param("pi", u.pi, ctx);
    NCPoly phi = detail::parse_param("phi", u.phi, ctx);
    const Coefficient i = Coefficient::imaginary_unit();
    const Coefficient q = Coefficient::q_power(1);
    const Coefficient hb = Coefficient::hbar_power(1);
    auto idx = [](int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; };

    if (u.with_nh1)
        for (int a : u.x_range)
            for (int b : u.p_range) {
                NCPoly x = pres.gen("x_" + std::to_string(a)), p = pres.gen("p_" + std::to_string(b));
                pres.relations.push_back(
                    {"nH1" + idx(a, b), x * p - q.pow(u.n) * p * x - i * q.pow(u.n - 1) * hb.pow(u.n) * psi});
            }
    if (u.with_nh2)
        for (int a : u.x_range)
            for (int c : u.y_range) {
                NCPoly x = pres.gen("x_" + std::to_string(a)), y = pres.gen("y_" + std::to_string(c));
                Coefficient k = i * (q - Coefficient(1)).pow(u.m - 1) * hb.pow(u.m - 1);
                pres.relations.push_back({"nH2" + idx(a, c), q.pow(u.m) * x * y - y * x + k * pi});
            }
    if (u.with_nh3)
        for (int c : u.y_range)
            for (int b : u.p_range) {
                NCPoly y = pres.gen("y_" + std::to_string(c)), p = pres.gen("p_" + std::to_string(b));
                pres.relations.push_back(
                    {"nH3" + idx(c, b), q.pow(u.l) * y * p - q.pow(u.l + 1) * p * y - i * hb.pow(u.l) * phi});
            }
    pres.parameters = {{"n", std::to_string(u.n)}, {"m", std::to_string(u.m)}, {"l", std::to_string(u.l)},
                       {"psi", u.psi},           {"pi", u.pi},                {"phi", u.phi}};
    pres.metadata = {"q real, q not in {0, 1}; q = 1 only through classical_limit"};
    pres.validate();
    return pres;
}

/// Builds UnifiedParams from string parameters (n, m, l, psi, pi, phi,
/// range, extras).
inline UnifiedParams unified_params_from(const FamilyParams& params) {
    detail::check_params("unified", params, {"n", "m", "l", "psi", "pi", "phi", "range", "extras"});
    UnifiedParams u;
    u.n = detail::parse_int_param("n", detail::param_or(params, "n", "1"));
    u.m = detail::parse_int_param("m", detail::param_or(params, "m", "1"));
    u.l = detail::parse_int_param("l", detail::param_or(params, "l", "1"));
    u.psi = detail::param_or(params, "psi", "1");
    u.pi = detail::param_or(params, "pi", "0");
    u.phi = detail::param_or(params, "phi", "0");
    if (auto it = params.find("range"); it != params.end()) {
        int r = detail::parse_int_param("range", it->second);
        if (r < 1 || r > 3) throw ParamError("range must be 1, 2 or 3");
        u.x_range = u.y_range = u.p_range = {};
        for (int k = 1; k <= r; ++k) {
            u.x_range.push_back(k);
            u.y_range.push_back(k);
            u.p_range.push_back(k);
        }
    }
    if (auto it = params.find("extras"); it != params.end()) u.extra_generators = detail::split_list(it->second);
    return u;
}

/// Substitutes q = 1 (s = 1) in every coefficient.  A coefficient with a pole
/// at q = 1 is rejected.
inline Presentation classical_limit(const Presentation& pres) {
    Presentation out = pres;
    out.name = pres.name + "@q=1";
    for (auto& r : out.relations) {
        try {
            r.poly = central_substitute(r.poly, std::string(var_sqrt_q), Coefficient(1));
        } catch (const PoleAtPoint& e) {
            throw ParamError("relation '" + r.label + "' has a pole at q = 1");
        } catch (const DivisionByZero& e) {
            throw ParamError("relation '" + r.label + "' has a pole at q = 1");
        }
    }
    out.relations.erase(std::remove_if(out.relations.begin(), out.relations.end(),
                                       [](const Relation& r) { return r.poly.is_zero(); }),
                        out.relations.end());
    return out;
}

/// Renames generators (and rebuilds relations) into a new alphabet order.
inline Presentation rename_presentation(const Presentation& pres, const std::vector<std::string>& new_order,
                                        const std::map<std::string, std::string>& renaming) {
    Presentation out = pres;
    out.alphabet = make_alphabet(new_order);
    for (auto& r : out.relations) r.poly = rename_generators(r.poly, out.alphabet, renaming);
    auto ren = [&](const std::string& g) {
        auto it = renaming.find(g);
        return it == renaming.end() ? g : it->second;
    };
    for (auto& [a, b] : out.inverse_pairs) {
        a = ren(a);
        b = ren(b);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ore data

struct OreEntry {
    std::string adjoined;
    std::string earlier;
    NCPoly sigma;
    NCPoly delta;
};

struct OreData {
    std::vector<std::string> tower;
    std::vector<OreEntry> entries;

    const OreEntry& at(const std::string& adjoined, const std::string& earlier) const {
        for (const auto& e : entries)
            if (e.adjoined == adjoined && e.earlier == earlier) return e;
        throw ParamError("no Ore data for (" + adjoined + ", " + earlier + ")");
    }
};

/// For each adjoined generator y and each earlier g in the tower, splits
/// normalize(y*g) as sigma*y + delta with sigma, delta over earlier
/// generators.
inline OreData extract_ore(const Presentation& pres, const std::vector<std::string>& tower,
                           const RewriteSystem& sys) {
    OreData data;
    data.tower = tower;
    std::set<std::string> seen;
    for (const auto& g : tower) {
        if (!pres.alphabet->find(g)) throw ParamError("tower generator '" + g + "' is not in " + pres.name);
        if (!seen.insert(g).second) throw ParamError("tower lists '" + g + "' twice");
    }
    const AlphabetPtr& alpha = pres.alphabet;
    for (std::size_t k = 1; k < tower.size(); ++k) {
        Letter y = alpha->letter(tower[k]);
        std::vector<bool> earlier(alpha->size(), false);
        for (std::size_t j = 0; j < k; ++j) earlier[alpha->letter(tower[j])] = true;
        for (std::size_t j = 0; j < k; ++j) {
            const std::string& g = tower[j];
            NCPoly nf = normalize(pres.gen(tower[k]) * pres.gen(g), sys);
            NCPoly sigma(alpha), delta(alpha);
            auto bad = [&](const std::string& why) {
                return NotOreShaped("(" + tower[k] + ", " + g + "): " + why);
            };
            for (const auto& [w, c] : nf.terms()) {
                bool ends_with_y = !w.empty() && w.back() == y;
                Word body = ends_with_y ? Word(w.begin(), w.end() - 1) : w;
                for (Letter l : body)
                    if (!earlier[l])
                        throw bad("normal form term " + word_to_string(*alpha, w) + " involves " + alpha->name(l));
                if (ends_with_y)
                    sigma.add_term(body, c);
                else
                    delta.add_term(body, c);
            }
            NCPoly check = nf - (sigma * pres.gen(tower[k]) + delta);
            if (!normalize(check, sys).is_zero()) throw bad("reassembled sigma*y + delta differs from y*g");
            data.entries.push_back({tower[k], g, std::move(sigma), std::move(delta)});
        }
    }
    return data;
}

inline OreData extract_ore(const Presentation& pres, const std::vector<std::string>& tower) {
    return extract_ore(pres, tower, orient(pres));
}

/// Presentation rebuilt from Ore data: y*g = sigma*y + delta for each pair,
/// plus the original relations that involve generators outside the tower.
/// Pairs declared as inverses are left to the inverse-pair relations.
inline Presentation ore_presentation(const Presentation& pres, const OreData& data) {
    Presentation out = pres;
    out.name = pres.name + "-ore";
    out.relations.clear();
    std::set<Letter> in_tower;
    for (const auto& g : data.tower) in_tower.insert(pres.alphabet->letter(g));
    for (const auto& r : pres.relations) {
        auto used = r.poly.letters_used();
        if (std::any_of(used.begin(), used.end(), [&](Letter l) { return !in_tower.count(l); }))
            out.relations.push_back(r);
    }
    auto inverse = [&](const std::string& a, const std::string& b) {
        for (const auto& [g, gi] : pres.inverse_pairs)
            if ((g == a && gi == b) || (g == b && gi == a)) return true;
        return false;
    };
    for (const auto& e : data.entries) {
        if (inverse(e.adjoined, e.earlier)) continue;
        NCPoly y = pres.gen(e.adjoined), g = pres.gen(e.earlier);
        out.relations.push_back({"ore(" + e.adjoined + "," + e.earlier + ")", y * g - e.sigma * y - e.delta});
    }
    return out;
}

} // namespace qheis
