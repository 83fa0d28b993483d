#include <gtest/gtest.h>

#include "qheis/families.hpp"
#include "qheis/interface/format.hpp"

using namespace qheis;

namespace {

NCPoly P(const Presentation& pr, const std::string& s) { return parse_expr(s, pr); }

}  // namespace

TEST(Catalog, EveryFamilyOrientsAndIsConfluent) {
    for (const auto& f : family_list()) {
        Presentation pr = catalog(f.id);
        RewriteSystem sys = orient(pr);
        auto rep = check_confluence(sys, 6);
        EXPECT_TRUE(rep.confluent) << f.id << " unresolved " << rep.unresolved.size();
        for (const auto& cp : rep.unresolved)
            ADD_FAILURE() << f.id << ": " << word_to_string(*pr.alphabet, cp.overlap_word) << "  "
                          << format_expr(cp.left_normal) << "  vs  " << format_expr(cp.right_normal);
    }
}

TEST(Catalog, GaddisAsPrintedLeavesOneOverlap) {
    Presentation pr = catalog("gaddis", {{"variant", "printed"}});
    auto rep = check_confluence(orient(pr), 6);
    ASSERT_EQ(rep.unresolved.size(), 1u);
    EXPECT_EQ(word_to_string(*pr.alphabet, rep.unresolved[0].overlap_word), "y*z*x");
    NCPoly gap = rep.unresolved[0].left_normal - rep.unresolved[0].right_normal;
    EXPECT_EQ(gap, P(pr, "hbar*(p^-1 - q^-1)*z^2"));
    EXPECT_TRUE(check_confluence(orient(catalog("gaddis", {{"variant", "printed"}, {"p", "q"}})), 6).confluent);
}

TEST(Catalog, ClassicalHasFifteenRelations) {
    EXPECT_EQ(catalog("classical").relations.size(), 15u);
    EXPECT_EQ(catalog("classical", {{"dim", "1"}}).relations.size(), 1u);
}

TEST(Catalog, GhaInstance) {
    Presentation pr = catalog("gha");
    EXPECT_EQ(pr.relation("hx").poly, P(pr, "h*x - x*h^2"));
    EXPECT_EQ(pr.relation("yh").poly, P(pr, "y*h - h^2*y"));
    EXPECT_EQ(pr.relation("yx").poly, P(pr, "y*x - x*y - hbar*h^2 + hbar*h"));
}

TEST(Catalog, UnknownFamilyAndBadParams) {
    EXPECT_THROW(catalog("nope"), UnknownFamily);
    EXPECT_THROW(catalog("classical", {{"dim", "x"}}), ParamError);
    EXPECT_THROW(catalog("gha", {{"f", "x*h"}}), ParamError);
    EXPECT_THROW(catalog("wess", {{"colour", "red"}}), ParamError);
}

TEST(Normalize, GaddisYXX) {
    Presentation pr = catalog("gaddis");
    EXPECT_EQ(format_expr(normalize(P(pr, "y*x*x"), orient(pr))), "q^2*x^2*y + hbar*(q + p^-1)*x*z");
    Presentation printed = catalog("gaddis", {{"variant", "printed"}});
    EXPECT_EQ(format_expr(normalize(P(printed, "y*x*x"), orient(printed))), "q^2*x^2*y + hbar*(q + q^-1)*x*z");
}
