#include <gtest/gtest.h>

#include "qheis/families.hpp"
#include "qheis/interface/format.hpp"
#include "qheis/interface/parse.hpp"

using namespace qheis;

namespace {

SymbolContext ctx(std::vector<std::string> gens, std::vector<std::string> opaques = {}) {
    return SymbolContext::of(make_alphabet(gens), std::move(opaques));
}

}  // namespace

TEST(Parse, ThreeTermPolynomial) {
    auto c = ctx({"x", "p"});
    NCPoly a = parse_expr("x*p - q*p*x - i*hbar", c);
    EXPECT_EQ(a.size(), 3u);
}

TEST(Parse, BracketSugar) {
    auto c = ctx({"x", "z", "y"});
    NCPoly a = parse_expr("[y, x] - hbar*z", c);
    NCPoly b = parse_expr("y*x - x*y - hbar*z", c);
    EXPECT_EQ(a, b);
}

TEST(Parse, HalfPowerLowersToSquareRootVariable) {
    auto c = ctx({"Lambda", "p", "x"});
    NCPoly a = parse_expr("q^(1/2)*x*p - q^(-1/2)*p*x - i*hbar*Lambda", c);
    Word xp{c.alphabet->letter("x"), c.alphabet->letter("p")};
    EXPECT_EQ(a.coefficient(xp), Coefficient::q_half_power(1));
}

TEST(Parse, Errors) {
    auto c = ctx({"Lambda", "p", "x"});
    EXPECT_THROW(parse_expr("x p", c), ParseError);
    EXPECT_THROW(parse_expr("x^(1/2)", c), ParseError);
    EXPECT_THROW(parse_expr("x/p", c), ParseError);
    try {
        parse_expr("Lamda*x", c);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("Lambda"), std::string::npos);
        EXPECT_EQ(e.position(), 0u);
    }
}

TEST(Format, Plain) {
    auto c = ctx({"x", "p"});
    EXPECT_EQ(format_expr(parse_expr("x*p - i*hbar", c)), "x*p - i*hbar");
    EXPECT_EQ(format_expr(NCPoly(c.alphabet)), "0");
    EXPECT_EQ(format_expr(NCPoly(c.alphabet), Style::latex), "0");
    EXPECT_EQ(format_expr(NCPoly(c.alphabet), Style::machine), "0");
    auto g = ctx({"x", "z", "y"});
    EXPECT_EQ(format_expr(parse_expr("q^2*x*x*y + hbar*(q + p^-1)*x*z", g)), "q^2*x^2*y + hbar*(q + p^-1)*x*z");
}

TEST(Format, Latex) {
    auto c = ctx({"u_inv", "u", "x", "p"});
    std::string s = format_expr(parse_expr("i*(q^(3/2) - q^(-1/2))*u*hbar", c), Style::latex);
    EXPECT_EQ(s, "i\\hbar(q^{3/2} - q^{-1/2})\\hat{u}");
}

TEST(Parse, DollarSpellsCentralParameter) {
    Presentation w = catalog("wess");
    NCPoly a = parse_expr("$p^(3/2)*p + $q*x", w);
    EXPECT_EQ(a, Coefficient::p_half_power(3) * w.gen("p") + Coefficient::q_power(1) * w.gen("x"));
    EXPECT_EQ(format_expr(a), "q*x + $p^(3/2)*p");
    EXPECT_EQ(parse_expr(format_expr(a), w), a);
    Presentation g = catalog("gaddis");
    EXPECT_EQ(format_expr(parse_expr("$p*x", g)), "p*x");
    EXPECT_THROW(parse_expr("$r", w), ParseError);
}
