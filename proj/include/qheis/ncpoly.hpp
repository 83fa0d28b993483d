#pragma once

// Free associative algebra over the coefficient field: words over a finite
// generator alphabet and finite linear combinations of them.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "coeffs.hpp"
#include "errors.hpp"

namespace qheis {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

struct Generator {
    std::string name;          // full spelling, e.g. "x_2" or "u_inv"
    std::string base;          // name without the index suffix
    std::optional<int> index;  // trailing _<digits>, if any
    int precedence = 0;        // rank in the alphabet, lowest first
};

/// Generators of one presentation, listed in increasing precedence.  A
/// letter's numeric value is its precedence rank, so comparing letters
/// compares precedence.
class Alphabet {
public:
    explicit Alphabet(const std::vector<std::string>& names) {
        for (const auto& n : names) {
            if (n.empty()) throw AlphabetError("empty generator name");
            if (by_name_.count(n)) throw AlphabetError("generator '" + n + "' declared twice");
            Generator g;
            g.name = n;
            g.base = n;
            auto us = n.rfind('_');
            if (us != std::string::npos && us + 1 < n.size() &&
                n.find_first_not_of("0123456789", us + 1) == std::string::npos) {
                g.base = n.substr(0, us);
                g.index = std::stoi(n.substr(us + 1));
            }
            g.precedence = static_cast<int>(gens_.size());
            by_name_.emplace(n, static_cast<Letter>(gens_.size()));
            gens_.push_back(std::move(g));
        }
    }

    std::size_t size() const noexcept { return gens_.size(); }
    const Generator& generator(Letter l) const { return gens_.at(l); }
    const std::string& name(Letter l) const { return gens_.at(l).name; }
    const std::vector<Generator>& generators() const noexcept { return gens_; }

    std::vector<std::string> names() const {
        std::vector<std::string> r;
        for (const auto& g : gens_) r.push_back(g.name);
        return r;
    }

    std::optional<Letter> find(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    Letter letter(const std::string& name) const {
        if (auto l = find(name)) return *l;
        throw UnboundGenerator("generator '" + name + "' is not in the alphabet");
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names() == b.names(); }

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, Letter> by_name_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(const std::vector<std::string>& names) {
    return std::make_shared<const Alphabet>(names);
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Graded lexicographic order on words: shorter first, then by letter rank.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// ---------------------------------------------------------------------------

class NCPoly {
public:
    using Terms = std::map<Word, Coefficient, DegLexLess>;

    explicit NCPoly(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) {
        if (!alpha_) throw AlphabetError("polynomial without an alphabet");
    }

    static NCPoly constant(AlphabetPtr alphabet, const Coefficient& c) {
        NCPoly p(std::move(alphabet));
        p.add_term(Word{}, c);
        return p;
    }
    static NCPoly monomial(AlphabetPtr alphabet, Word w, const Coefficient& c = Coefficient(1)) {
        NCPoly p(std::move(alphabet));
        p.add_term(w, c);
        return p;
    }
    static NCPoly generator(AlphabetPtr alphabet, const std::string& name) {
        Letter l = alphabet->letter(name);
        return monomial(std::move(alphabet), Word{l});
    }

    const AlphabetPtr& alphabet() const noexcept { return alpha_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Coefficient coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Coefficient{} : it->second;
    }

    std::size_t max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

    void add_term(const Word& w, const Coefficient& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly operator-() const {
        NCPoly r(alpha_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    NCPoly& operator+=(const NCPoly& o) {
        require_same(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        require_same(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        a.require_same(b);
        NCPoly r(a.alpha_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
        return r;
    }
    friend NCPoly operator*(const Coefficient& c, const NCPoly& a) {
        NCPoly r(a.alpha_);
        if (c.is_zero()) return r;
        for (const auto& [w, ca] : a.terms_) r.add_term(w, c * ca);
        return r;
    }
    friend NCPoly operator*(const NCPoly& a, const Coefficient& c) { return c * a; }

    NCPoly pow(unsigned k) const {
        NCPoly r = constant(alpha_, Coefficient(1));
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        if (!same_alphabet(a.alpha_, b.alpha_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }

    std::vector<Letter> letters_used() const {
        std::vector<bool> seen(alpha_->size(), false);
        for (const auto& entry : terms_)
            for (Letter l : entry.first) seen[l] = true;
        std::vector<Letter> r;
        for (std::size_t k = 0; k < seen.size(); ++k)
            if (seen[k]) r.push_back(static_cast<Letter>(k));
        return r;
    }

    std::set<std::string> central_variables() const {
        std::set<std::string> vs;
        for (const auto& entry : terms_) {
            auto v = entry.second.variables();
            vs.insert(v.begin(), v.end());
        }
        return vs;
    }

    /// Apply `fn` to every coefficient, dropping terms that become zero.
    NCPoly map_coefficients(const std::function<Coefficient(const Coefficient&)>& fn) const {
        NCPoly r(alpha_);
        for (const auto& [w, c] : terms_) r.add_term(w, fn(c));
        return r;
    }

    void require_same(const NCPoly& o) const {
        if (!same_alphabet(alpha_, o.alpha_)) throw AlphabetError("operands use different generator alphabets");
    }

private:
    AlphabetPtr alpha_;
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Operations

enum class PolyOp { add, neg, scalar_mul, mul };

inline NCPoly poly_arith(PolyOp op, const NCPoly& a, const std::variant<std::monostate, NCPoly, Coefficient>& b = {}) {
    switch (op) {
    case PolyOp::neg:
        return -a;
    case PolyOp::add:
        if (auto* p = std::get_if<NCPoly>(&b)) return a + *p;
        throw ParamError("add needs a polynomial operand");
    case PolyOp::mul:
        if (auto* p = std::get_if<NCPoly>(&b)) return a * *p;
        throw ParamError("mul needs a polynomial operand");
    case PolyOp::scalar_mul:
        if (auto* c = std::get_if<Coefficient>(&b)) return *c * a;
        throw ParamError("scalar_mul needs a coefficient operand");
    }
    return a;
}

inline NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

using GeneratorMap = std::map<std::string, NCPoly>;

/// Algebra homomorphism from the free algebra on a's alphabet, fixed by the
/// images of the generators.  All images must share one target alphabet.
inline NCPoly substitute(const NCPoly& a, const GeneratorMap& images) {
    if (images.empty()) {
        if (a.is_zero()) return a;
        throw UnboundGenerator("empty substitution for a nonzero polynomial");
    }
    AlphabetPtr target = images.begin()->second.alphabet();
    std::vector<std::optional<NCPoly>> by_letter(a.alphabet()->size());
    for (const auto& [name, img] : images) {
        if (!same_alphabet(img.alphabet(), target))
            throw AlphabetError("substitution images use different alphabets");
        if (auto l = a.alphabet()->find(name)) by_letter[*l] = img;
    }
    NCPoly result(target);
    for (const auto& [w, c] : a.terms()) {
        NCPoly term = NCPoly::constant(target, c);
        for (Letter l : w) {
            if (!by_letter[l])
                throw UnboundGenerator("no image for generator '" + a.alphabet()->name(l) + "'");
            term = term * *by_letter[l];
        }
        result += term;
    }
    return result;
}

/// Move a polynomial to another alphabet by renaming generators.  Names not in
/// `renaming` keep their spelling.
inline NCPoly rename_generators(const NCPoly& a, const AlphabetPtr& target,
                                const std::map<std::string, std::string>& renaming = {}) {
    NCPoly result(target);
    std::vector<Letter> map(a.alphabet()->size());
    std::vector<bool> bound(a.alphabet()->size(), false);
    for (Letter l = 0; l < a.alphabet()->size(); ++l) {
        const std::string& n = a.alphabet()->name(l);
        auto it = renaming.find(n);
        auto tl = target->find(it == renaming.end() ? n : it->second);
        if (tl) {
            map[l] = *tl;
            bound[l] = true;
        }
    }
    for (const auto& [w, c] : a.terms()) {
        Word tw;
        tw.reserve(w.size());
        for (Letter l : w) {
            if (!bound[l])
                throw UnboundGenerator("generator '" + a.alphabet()->name(l) + "' has no counterpart in the target");
            tw.push_back(map[l]);
        }
        result.add_term(tw, c);
    }
    return result;
}

using NumericImage = std::map<Word, GaussRational, DegLexLess>;

inline NumericImage central_scale_eval(const NCPoly& a, const Point& point) {
    NumericImage r;
    for (const auto& [w, c] : a.terms()) r.emplace(w, coeff_eval(c, point));
    return r;
}

/// Equality of numeric images, treating absent words as zero.
inline bool numeric_equal(const NumericImage& a, const NumericImage& b) {
    auto covered = [](const NumericImage& x, const NumericImage& y) {
        for (const auto& [w, v] : x) {
            auto it = y.find(w);
            GaussRational other = it == y.end() ? GaussRational(0) : it->second;
            if (!(v == other)) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

/// Replace a central variable in every coefficient.
inline NCPoly central_substitute(const NCPoly& a, const std::string& var, const Coefficient& value) {
    return a.map_coefficients([&](const Coefficient& c) { return coeff_substitute(c, var, value); });
}

} // namespace qheis
