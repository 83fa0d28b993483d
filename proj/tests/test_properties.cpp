#include <gtest/gtest.h>

#include "qheis/verify.hpp"

using namespace qheis;

namespace {

Coefficient random_central(Rng& rng, int nvars = 4) {
    std::uniform_int_distribution<int> c(-4, 4), e(-2, 3), n(1, 3), pick(0, nvars - 1);
    const char* vars[] = {"s", "t", "h", "D"};
    Coefficient out(0);
    int terms = n(rng);
    for (int k = 0; k < terms; ++k) {
        Coefficient t(GaussRational(Rational(c(rng)), Rational(c(rng) / 2)));
        int f = n(rng) - 1;
        for (int j = 0; j < f; ++j) t = t * Coefficient::variable(vars[pick(rng)], e(rng));
        out += t;
    }
    return out;
}

Coefficient random_rational_function(Rng& rng, int nvars = 4) {
    Coefficient den;
    do den = random_central(rng, nvars);
    while (den.is_zero());
    return random_central(rng, nvars) / den;
}

// Word-by-word product, kept independent of NCPoly's own multiplication.
std::map<Word, Coefficient, DegLexLess> naive_product(const NCPoly& a, const NCPoly& b) {
    std::map<Word, Coefficient, DegLexLess> out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::vector<Presentation> families() {
    std::vector<Presentation> out;
    for (const auto& f : family_list()) out.push_back(catalog(f.id));
    return out;
}

}  // namespace

TEST(FieldProperties, Axioms) {
    Rng rng(101);
    for (int n = 0; n < 200; ++n) {
        Coefficient a = random_rational_function(rng), b = random_rational_function(rng),
                    c = random_rational_function(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
            EXPECT_TRUE((a * a.inverse()).is_one());
        }
    }
}

TEST(FieldProperties, EvaluationIsAHomomorphism) {
    Rng rng(102);
    int checked = 0;
    for (int n = 0; n < 200; ++n) {
        Coefficient a = random_rational_function(rng), b = random_rational_function(rng);
        Point pt = random_point({"s", "t", "h", "D"}, rng);
        try {
            GaussRational ea = coeff_eval(a, pt), eb = coeff_eval(b, pt);
            EXPECT_EQ(coeff_eval(a + b, pt), ea + eb);
            EXPECT_EQ(coeff_eval(a * b, pt), ea * eb);
            ++checked;
        } catch (const PoleAtPoint&) {
        }
    }
    EXPECT_GT(checked, 150);
}

TEST(FieldProperties, QNumberClosedFormUpTo25) {
    for (int k = 1; k <= 25; ++k) EXPECT_EQ(qnumber(k), qnumber_closed_form(k)) << k;
}

TEST(RingProperties, AxiomsAgainstNaiveProduct) {
    Presentation w = catalog("wess");
    Rng rng(103);
    for (int n = 0; n < 200; ++n) {
        NCPoly a = random_poly(w.alphabet, 3, 3, rng), b = random_poly(w.alphabet, 3, 3, rng),
               c = random_poly(w.alphabet, 3, 3, rng);
        NCPoly ab = a * b;
        std::map<Word, Coefficient, DegLexLess> got(ab.terms().begin(), ab.terms().end());
        EXPECT_EQ(got, naive_product(a, b));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) * c, a * c + b * c);
    }
}

TEST(RingProperties, Jacobi) {
    Presentation g = catalog("gaddis");
    Rng rng(104);
    for (int n = 0; n < 200; ++n) {
        NCPoly a = random_poly(g.alphabet, 3, 3, rng), b = random_poly(g.alphabet, 3, 3, rng),
               c = random_poly(g.alphabet, 3, 3, rng);
        NCPoly j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
        EXPECT_TRUE(j.is_zero());
    }
}

TEST(NormalizeProperties, IdempotentLinearCompatible) {
    Rng rng(105);
    for (const auto& pres : families()) {
        RewriteSystem sys = orient(pres);
        for (int n = 0; n < 40; ++n) {
            NCPoly a = random_poly(pres.alphabet, 4, 3, rng), b = random_poly(pres.alphabet, 3, 3, rng);
            Coefficient c = random_coefficient(rng);
            NCPoly na = normalize(a, sys), nb = normalize(b, sys);
            EXPECT_EQ(normalize(na, sys), na) << pres.name;
            for (const auto& [w, _] : na.terms()) EXPECT_TRUE(sys.is_irreducible(w)) << pres.name;
            EXPECT_EQ(normalize(a + c * b, sys), na + c * nb) << pres.name;
            EXPECT_EQ(normalize(a * b, sys), normalize(na * nb, sys)) << pres.name;
        }
    }
}

TEST(NormalizeProperties, RelationsAndRulesLieInTheIdeal) {
    for (const auto& pres : families()) {
        RewriteSystem sys = orient(pres);
        for (const auto& r : pres.relations) EXPECT_TRUE(normalize(r.poly, sys).is_zero()) << pres.name << " " << r.label;
        for (const auto& rule : sys.rules())
            EXPECT_TRUE(normalize(NCPoly::monomial(pres.alphabet, rule.lhs) - rule.rhs, sys).is_zero()) << rule.origin;
    }
}

TEST(NormalizeProperties, InversePairsCollapse) {
    for (const auto& pres : families()) {
        RewriteSystem sys = orient(pres);
        NCPoly one = pres.scalar(Coefficient(1));
        for (const auto& [g, gi] : pres.inverse_pairs) {
            EXPECT_EQ(normalize(pres.gen(g) * pres.gen(gi), sys), one) << g;
            EXPECT_EQ(normalize(pres.gen(gi) * pres.gen(g), sys), one) << g;
        }
    }
}

TEST(NormalizeProperties, TraceReplaysToNormalForm) {
    Rng rng(106);
    for (const auto& pres : families()) {
        RewriteSystem sys = orient(pres);
        for (int n = 0; n < 10; ++n) {
            NCPoly a = random_poly(pres.alphabet, 4, 2, rng);
            auto steps = reduce_trace(a, sys);
            EXPECT_EQ(steps.empty() ? a : steps.back().result, normalize(a, sys));
        }
    }
    Presentation g = catalog("gaddis");
    EXPECT_EQ(reduce_trace(parse_expr("y*x", g), orient(g)).size(), 1u);
}

TEST(ParserProperties, RoundTrip500PerFamily) {
    Rng rng(107);
    for (const auto& pres : families()) {
        for (int n = 0; n < 500; ++n) {
            NCPoly a = random_poly(pres.alphabet, 4, 4, rng);
            if (n % 3 == 0) a = a * pres.scalar(random_rational_function(rng, 3) + Coefficient(1));
            if (!pres.opaque_symbols.empty()) a = a * pres.scalar(Coefficient::variable(pres.opaque_symbols[0]));
            std::string text = format_expr(a);
            NCPoly back(pres.alphabet);
            try {
                back = parse_expr(text, pres);
            } catch (const ParseError& e) {
                FAIL() << pres.name << ": " << text << ": " << e.what();
            }
            ASSERT_EQ(back, a) << pres.name << ": " << text;
            ASSERT_EQ(poly_from_json(poly_json(a), pres.alphabet), a);
        }
    }
}

TEST(OreProperties, PresentationFromOreDataIsEquivalent) {
    struct Case {
        Presentation pres;
        std::vector<std::string> tower;
    };
    std::vector<Case> cases{{catalog("wess"), {"Lambda_inv", "Lambda", "p", "x"}},
                            {catalog("wess_schwenk"), {"x", "xbar", "p"}},
                            {catalog("gaddis"), {"x", "z", "y"}},
                            {catalog("classical", {{"dim", "2"}}), {"x_1", "x_2", "p_1", "p_2"}}};
    for (const auto& c : cases) {
        RewriteSystem sys = orient(c.pres);
        OreData d = extract_ore(c.pres, c.tower, sys);
        Presentation back = ore_presentation(c.pres, d);
        auto r = verify_relation_set_equivalence(c.pres, back, 4, 30);
        EXPECT_TRUE(r.ok()) << c.pres.name << ": " << r.summary;
    }
}

TEST(UnifiedProperties, ClassicalLimitGivesCommutators) {
    Presentation lim = classical_limit(unified({}));
    for (const auto& r : lim.relations) {
        EXPECT_TRUE(r.poly.central_variables().count("s") == 0) << r.label;
    }
    EXPECT_EQ(format_expr(lim.relation("nH2[1,1]").poly), format_expr(parse_expr("x_1*y_1 - y_1*x_1", lim)));
    EXPECT_EQ(format_expr(lim.relation("nH3[1,1]").poly), format_expr(parse_expr("y_1*p_1 - p_1*y_1", lim)));
    UnifiedParams pole;
    pole.m = 0;
    pole.pi = "1";
    EXPECT_THROW(classical_limit(unified(pole)), ParamError);
}
