#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncpoly.hpp"

namespace qheis {

/// Which term order orientation uses.
///
/// `deglex` compares words by length, then lexicographically by generator
/// precedence.  `weighted` is for algebras like H(f), where a relation such
/// as h*x = x*f(h) grows the word: it compares first the number of
/// (left_of, right_of) letter pairs standing in that order, then the sum over
/// occurrences of a weighted letter of base^(right_of letters after it +
/// left_of letters before it), and only then falls back to deglex.  With
/// base > deg f this is a well-founded order compatible with concatenation.
struct OrderSpec {
    enum class Kind { deglex, weighted };

    Kind kind = Kind::deglex;
    std::vector<std::string> weighted;
    std::vector<std::string> right_of;
    std::vector<std::string> left_of;
    int base = 2;

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

struct Relation {
    std::string label;
    NCPoly poly;  // the relation reads poly = 0
};

/// A finitely presented algebra: the free algebra on `alphabet` modulo the
/// two-sided ideal of the relations (and of g*g_inv - 1, g_inv*g - 1 for each
/// inverse pair).
struct Presentation {
    std::string name;
    AlphabetPtr alphabet;
    std::vector<std::pair<std::string, std::string>> inverse_pairs;
    std::vector<Relation> relations;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> opaque_symbols;
    std::vector<std::string> metadata;
    OrderSpec order;
    bool interreduce = false;

    const Relation& relation(const std::string& label) const {
        for (const auto& r : relations)
            if (r.label == label) return r;
        throw ParamError("presentation '" + name + "' has no relation labelled '" + label + "'");
    }

    bool has_relation(const std::string& label) const {
        return std::any_of(relations.begin(), relations.end(), [&](const Relation& r) { return r.label == label; });
    }

    NCPoly gen(const std::string& n) const { return NCPoly::generator(alphabet, n); }
    NCPoly scalar(const Coefficient& c) const { return NCPoly::constant(alphabet, c); }

    /// Checks the structural invariants; throws SchemaError naming the field.
    void validate() const {
        if (!alphabet) throw SchemaError("generators: presentation has no alphabet");
        std::set<std::string> labels;
        std::set<std::string> centrals{std::string(var_sqrt_q), std::string(var_sqrt_p), std::string(var_hbar)};
        for (const auto& o : opaque_symbols) {
            if (is_builtin_central(o) || o == "i" || o == "hbar" || o == "q" || o == "p")
                throw SchemaError("opaque: '" + o + "' collides with a built-in symbol");
            if (alphabet->find(o)) throw SchemaError("opaque: '" + o + "' is also a generator");
            centrals.insert(o);
        }
        for (std::size_t k = 0; k < relations.size(); ++k) {
            const auto& r = relations[k];
            std::string path = "relations[" + std::to_string(k) + "] (" + r.label + ")";
            if (!labels.insert(r.label).second) throw SchemaError(path + ": duplicate label");
            if (!same_alphabet(r.poly.alphabet(), alphabet)) throw SchemaError(path + ": uses a different alphabet");
            for (const auto& v : r.poly.central_variables())
                if (!centrals.count(v)) throw SchemaError(path + ": undeclared central symbol '" + v + "'");
        }
        for (std::size_t k = 0; k < inverse_pairs.size(); ++k) {
            const auto& [g, gi] = inverse_pairs[k];
            std::string path = "inverses[" + std::to_string(k) + "]";
            if (!alphabet->find(g)) throw SchemaError(path + ": undeclared generator '" + g + "'");
            if (!alphabet->find(gi)) throw SchemaError(path + ": undeclared generator '" + gi + "'");
        }
        for (const auto* names : {&order.weighted, &order.right_of, &order.left_of})
            for (const auto& n : *names)
                if (!alphabet->find(n)) throw SchemaError("order: undeclared generator '" + n + "'");
    }
};

} // namespace qheis
