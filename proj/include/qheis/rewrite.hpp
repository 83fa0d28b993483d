#pragma once

// Orientation of relations into rewrite rules, normal forms, and local
// confluence checking by critical pairs (diamond lemma on bounded overlaps).

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncpoly.hpp"
#include "presentation.hpp"

namespace qheis {

inline std::string word_to_string(const Alphabet& alpha, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += '*';
        s += alpha.name(w[k]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Term order

class TermOrder {
public:
    TermOrder() = default;

    TermOrder(const Alphabet& alpha, const OrderSpec& spec) : spec_(spec) {
        if (spec.kind == OrderSpec::Kind::weighted) {
            if (spec.base < 2) throw OrientationError("weighted order needs base >= 2");
            auto mark = [&](const std::vector<std::string>& names) {
                std::vector<bool> v(alpha.size(), false);
                for (const auto& n : names) v[alpha.letter(n)] = true;
                return v;
            };
            weighted_ = mark(spec.weighted);
            right_of_ = mark(spec.right_of);
            left_of_ = mark(spec.left_of);
        }
    }

    const OrderSpec& spec() const noexcept { return spec_; }

    std::strong_ordering compare(const Word& a, const Word& b) const {
        if (spec_.kind == OrderSpec::Kind::weighted) {
            if (auto c = inversions(a) <=> inversions(b); c != 0) return c;
            BigInt wa = weight(a), wb = weight(b);
            if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a <=> b;
    }

    bool less(const Word& a, const Word& b) const { return compare(a, b) == std::strong_ordering::less; }

private:
    std::size_t inversions(const Word& w) const {
        std::size_t count = 0, lefts = 0;
        for (Letter l : w) {
            if (right_of_[l]) count += lefts;
            if (left_of_[l]) ++lefts;
        }
        return count;
    }

    BigInt weight(const Word& w) const {
        std::size_t rights_after = 0;
        for (Letter l : w)
            if (right_of_[l]) ++rights_after;
        std::size_t lefts_before = 0;
        BigInt total = 0;
        for (Letter l : w) {
            if (right_of_[l]) --rights_after;
            if (weighted_[l]) {
                BigInt term;
                mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(spec_.base),
                              static_cast<unsigned long>(rights_after + lefts_before));
                total += term;
            }
            if (left_of_[l]) ++lefts_before;
        }
        return total;
    }

    OrderSpec spec_;
    std::vector<bool> weighted_, right_of_, left_of_;
};

// ---------------------------------------------------------------------------
// Rules and systems

struct RewriteRule {
    Word lhs;
    NCPoly rhs;
    std::string origin;
};

struct Match {
    std::size_t rule;
    std::size_t position;
};

inline constexpr std::size_t default_step_limit = 10000;

class RewriteSystem {
public:
    RewriteSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules, TermOrder order,
                  std::size_t step_limit = default_step_limit)
        : alpha_(std::move(alphabet)), rules_(std::move(rules)), order_(std::move(order)), step_limit_(step_limit) {
        if (step_limit_ == 0) throw ParamError("step limit must be positive");
        by_last_letter_.resize(alpha_->size());
        std::map<Word, std::size_t> seen;
        for (std::size_t k = 0; k < rules_.size(); ++k) {
            const auto& r = rules_[k];
            if (r.lhs.size() < 2)
                throw OrientationError("rule '" + r.origin + "' has a left side shorter than two letters");
            if (!same_alphabet(r.rhs.alphabet(), alpha_))
                throw OrientationError("rule '" + r.origin + "' uses a different alphabet");
            if (auto [it, ok] = seen.emplace(r.lhs, k); !ok)
                throw OrientationError("rules '" + rules_[it->second].origin + "' and '" + r.origin +
                                       "' share the left side " + word_to_string(*alpha_, r.lhs));
            for (const auto& entry : r.rhs.terms())
                if (!order_.less(entry.first, r.lhs))
                    throw OrientationError("rule '" + r.origin + "': right-side word " +
                                           word_to_string(*alpha_, entry.first) + " is not below " +
                                           word_to_string(*alpha_, r.lhs));
            by_last_letter_[r.lhs.back()].push_back(k);
            max_lhs_ = std::max(max_lhs_, r.lhs.size());
        }
    }

    const AlphabetPtr& alphabet() const noexcept { return alpha_; }
    const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
    const TermOrder& order() const noexcept { return order_; }
    std::size_t step_limit() const noexcept { return step_limit_; }
    std::size_t max_lhs_length() const noexcept { return max_lhs_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }
    void add_note(std::string n) { notes_.push_back(std::move(n)); }

    RewriteSystem with_step_limit(std::size_t limit) const {
        RewriteSystem s = *this;
        if (limit == 0) throw ParamError("step limit must be positive");
        s.step_limit_ = limit;
        return s;
    }

    /// Leftmost-innermost redex: the occurrence that ends first, and among
    /// those the shortest.
    std::optional<Match> find_match(const Word& w) const {
        for (std::size_t end = 2; end <= w.size(); ++end) {
            std::optional<Match> best;
            std::size_t best_len = 0;
            for (std::size_t k : by_last_letter_[w[end - 1]]) {
                const Word& lhs = rules_[k].lhs;
                if (lhs.size() > end) continue;
                std::size_t start = end - lhs.size();
                if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(start)) &&
                    (!best || lhs.size() < best_len)) {
                    best = Match{k, start};
                    best_len = lhs.size();
                }
            }
            if (best) return best;
        }
        return std::nullopt;
    }

    /// All redexes in w, by position then rule index.
    std::vector<Match> all_matches(const Word& w) const {
        std::vector<Match> out;
        for (std::size_t start = 0; start < w.size(); ++start)
            for (std::size_t k = 0; k < rules_.size(); ++k) {
                const Word& lhs = rules_[k].lhs;
                if (start + lhs.size() <= w.size() &&
                    std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(start)))
                    out.push_back({k, start});
            }
        return out;
    }

    bool is_irreducible(const Word& w) const { return !find_match(w).has_value(); }

    /// One rewrite step on a single word: prefix * rhs * suffix.
    NCPoly apply(const Word& w, const Match& m) const {
        const RewriteRule& r = rules_[m.rule];
        NCPoly out(alpha_);
        auto pos = static_cast<std::ptrdiff_t>(m.position);
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + static_cast<std::ptrdiff_t>(r.lhs.size()), w.end());
        for (const auto& [rw, rc] : r.rhs.terms()) out.add_term(concat(concat(prefix, rw), suffix), rc);
        return out;
    }

private:
    AlphabetPtr alpha_;
    std::vector<RewriteRule> rules_;
    TermOrder order_;
    std::size_t step_limit_;
    std::size_t max_lhs_ = 0;
    std::vector<std::vector<std::size_t>> by_last_letter_;
    std::vector<std::string> notes_;
};

// ---------------------------------------------------------------------------
// orient

namespace detail {

struct Oriented {
    std::string label;
    NCPoly poly;
    Word lead;
    Coefficient lead_coeff;
};

inline Word leading_word(const NCPoly& p, const TermOrder& order) {
    const Word* best = nullptr;
    for (const auto& entry : p.terms())
        if (!best || order.less(*best, entry.first)) best = &entry.first;
    return *best;
}

} // namespace detail

inline RewriteSystem orient(const Presentation& pres, std::size_t step_limit = default_step_limit) {
    pres.validate();
    const AlphabetPtr& alpha = pres.alphabet;
    TermOrder order(*alpha, pres.order);

    std::vector<Relation> rels = pres.relations;
    for (const auto& [g, gi] : pres.inverse_pairs) {
        NCPoly one = NCPoly::constant(alpha, Coefficient(1));
        rels.push_back({g + "*" + gi + "=1", pres.gen(g) * pres.gen(gi) - one});
        rels.push_back({gi + "*" + g + "=1", pres.gen(gi) * pres.gen(g) - one});
    }

    std::vector<detail::Oriented> accepted;
    std::vector<std::string> notes;
    auto describe = [&](const Relation& r) { return "relation '" + r.label + "' of " + pres.name; };

    for (const auto& rel : rels) {
        if (rel.poly.is_zero()) throw OrientationError(describe(rel) + " is identically zero");
        detail::Oriented o{rel.label, rel.poly, detail::leading_word(rel.poly, order), {}};
        o.lead_coeff = o.poly.coefficient(o.lead);
        for (;;) {
            auto clash = std::find_if(accepted.begin(), accepted.end(),
                                      [&](const detail::Oriented& a) { return a.lead == o.lead; });
            if (clash == accepted.end()) break;
            if (!pres.interreduce)
                throw OrientationError(describe(rel) + " and relation '" + clash->label +
                                       "' have the same leading word " + word_to_string(*alpha, o.lead));
            // Gaussian elimination on the shared leading word.
            o.poly = o.poly - (o.lead_coeff / clash->lead_coeff) * clash->poly;
            o.label += "~" + clash->label;
            if (o.poly.is_zero()) break;
            o.lead = detail::leading_word(o.poly, order);
            o.lead_coeff = o.poly.coefficient(o.lead);
        }
        if (o.poly.is_zero()) {
            notes.push_back("relation '" + rel.label + "' is dependent on earlier relations and was dropped");
            continue;
        }
        if (o.lead.size() < 2)
            throw OrientationError(describe(rel) + " has leading word " + word_to_string(*alpha, o.lead) +
                                   " of length " + std::to_string(o.lead.size()) +
                                   "; rules need a left side of at least two letters");
        accepted.push_back(std::move(o));
    }

    std::vector<RewriteRule> rules;
    for (const auto& o : accepted) {
        NCPoly lhs = NCPoly::monomial(alpha, o.lead);
        NCPoly rhs = lhs - o.lead_coeff.inverse() * o.poly;
        rules.push_back({o.lead, std::move(rhs), o.label});
    }
    RewriteSystem sys(alpha, std::move(rules), order, step_limit);
    for (auto& n : notes) sys.add_note(std::move(n));
    return sys;
}

// ---------------------------------------------------------------------------
// normalize

namespace detail {

class Normalizer {
public:
    explicit Normalizer(const RewriteSystem& sys) : sys_(sys) {}

    NCPoly run(const NCPoly& a) {
        if (!same_alphabet(a.alphabet(), sys_.alphabet()))
            throw AlphabetError("polynomial and rewrite system use different alphabets");
        NCPoly out(sys_.alphabet());
        for (const auto& [w, c] : a.terms()) out += c * word_nf(w);
        return out;
    }

    std::size_t steps() const noexcept { return steps_; }

private:
    const NCPoly& word_nf(const Word& w) {
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        auto m = sys_.find_match(w);
        if (!m) return memo_.emplace(w, NCPoly::monomial(sys_.alphabet(), w)).first->second;
        if (++steps_ > sys_.step_limit()) throw_non_termination(w);
        chain_.push_back(w);
        NCPoly result(sys_.alphabet());
        NCPoly step = sys_.apply(w, *m);
        for (const auto& [sw, sc] : step.terms()) result += sc * word_nf(sw);
        chain_.pop_back();
        return memo_.emplace(w, std::move(result)).first->second;
    }

    [[noreturn]] void throw_non_termination(const Word& w) const {
        std::string msg = "step limit " + std::to_string(sys_.step_limit()) + " exceeded; last reductions: ";
        std::size_t from = chain_.size() > 6 ? chain_.size() - 6 : 0;
        for (std::size_t k = from; k < chain_.size(); ++k) msg += word_to_string(*sys_.alphabet(), chain_[k]) + " -> ";
        msg += word_to_string(*sys_.alphabet(), w);
        throw NonTermination(msg);
    }

    const RewriteSystem& sys_;
    std::map<Word, NCPoly, DegLexLess> memo_;
    std::vector<Word> chain_;
    std::size_t steps_ = 0;
};

} // namespace detail

inline NCPoly normalize(const NCPoly& a, const RewriteSystem& sys) { return detail::Normalizer(sys).run(a); }

struct TraceStep {
    std::size_t rule;
    std::string origin;
    Word word;              // the term that was rewritten
    std::size_t position;   // offset of the redex inside `word`
    NCPoly result;          // whole polynomial after the step
};

/// Step-by-step reduction.  Each step rewrites the largest reducible term at
/// its leftmost-innermost redex, so the last result equals normalize(a).
inline std::vector<TraceStep> reduce_trace(const NCPoly& a, const RewriteSystem& sys) {
    if (!same_alphabet(a.alphabet(), sys.alphabet()))
        throw AlphabetError("polynomial and rewrite system use different alphabets");
    std::vector<TraceStep> trace;
    NCPoly current = a;
    for (;;) {
        std::optional<std::pair<Word, Match>> next;
        for (auto it = current.terms().rbegin(); it != current.terms().rend(); ++it)
            if (auto m = sys.find_match(it->first)) {
                next.emplace(it->first, *m);
                break;
            }
        if (!next) break;
        if (trace.size() >= sys.step_limit())
            throw NonTermination("trace exceeded the step limit of " + std::to_string(sys.step_limit()) +
                                 " at word " + word_to_string(*sys.alphabet(), next->first));
        const auto& [w, m] = *next;
        Coefficient c = current.coefficient(w);
        current -= NCPoly::monomial(sys.alphabet(), w, c);
        current += c * sys.apply(w, m);
        trace.push_back({m.rule, sys.rules()[m.rule].origin, w, m.position, current});
    }
    return trace;
}

// ---------------------------------------------------------------------------
// critical pairs

struct CriticalPair {
    Word overlap_word;
    std::size_t left_rule;   // applied at the start of the overlap
    std::size_t right_rule;  // applied at the end (or inside, for inclusions)
    NCPoly left_result;
    NCPoly right_result;
    bool resolved = false;
    NCPoly left_normal;
    NCPoly right_normal;
};

inline std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys, std::size_t max_overlap_len) {
    if (max_overlap_len < sys.max_lhs_length())
        throw ParamError("max overlap length " + std::to_string(max_overlap_len) +
                         " is below the longest left side (" + std::to_string(sys.max_lhs_length()) + ")");
    const auto& rules = sys.rules();
    const AlphabetPtr& alpha = sys.alphabet();
    std::vector<CriticalPair> out;

    auto make_pair = [&](Word w, std::size_t r1, std::size_t pos1, std::size_t r2, std::size_t pos2) {
        CriticalPair cp{w, r1, r2, sys.apply(w, {r1, pos1}), sys.apply(w, {r2, pos2}), false, NCPoly(alpha),
                        NCPoly(alpha)};
        cp.left_normal = normalize(cp.left_result, sys);
        cp.right_normal = normalize(cp.right_result, sys);
        cp.resolved = cp.left_normal == cp.right_normal;
        out.push_back(std::move(cp));
    };

    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& a = rules[i].lhs;
            const Word& b = rules[j].lhs;
            // suffix of a == prefix of b, proper overlap
            for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
                Word w = concat(a, Word(b.begin() + static_cast<std::ptrdiff_t>(k), b.end()));
                if (w.size() > max_overlap_len) continue;
                make_pair(std::move(w), i, 0, j, a.size() - k);
            }
            // b strictly inside a
            if (i != j && b.size() < a.size())
                for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos)
                    if (std::equal(b.begin(), b.end(), a.begin() + static_cast<std::ptrdiff_t>(pos)) &&
                        a.size() <= max_overlap_len)
                        make_pair(a, i, 0, j, pos);
        }

    std::stable_sort(out.begin(), out.end(), [](const CriticalPair& x, const CriticalPair& y) {
        return DegLexLess{}(x.overlap_word, y.overlap_word);
    });
    return out;
}

struct ConfluenceReport {
    bool confluent = true;
    std::size_t max_overlap_len = 0;
    std::size_t pairs_checked = 0;
    std::vector<CriticalPair> unresolved;
};

inline ConfluenceReport check_confluence(const RewriteSystem& sys, std::size_t max_overlap_len) {
    ConfluenceReport rep;
    rep.max_overlap_len = max_overlap_len;
    for (auto& cp : critical_pairs(sys, max_overlap_len)) {
        ++rep.pairs_checked;
        if (!cp.resolved) rep.unresolved.push_back(std::move(cp));
    }
    rep.confluent = rep.unresolved.empty();
    return rep;
}

/// All irreducible words up to the given length, in deglex order.
inline std::vector<Word> irreducible_words(const RewriteSystem& sys, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (Letter l = 0; l < sys.alphabet()->size(); ++l) {
                Word e = w;
                e.push_back(l);
                // Only the new suffix can create a redex.
                if (sys.is_irreducible(e)) next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

} // namespace qheis
