#include <gtest/gtest.h>

#include "qheis/rewrite.hpp"

using namespace qheis;

TEST(RewriteSmoke, QuantumPlane) {
    Presentation pr;
    pr.name = "plane";
    pr.alphabet = make_alphabet({"x", "y"});
    auto x = pr.gen("x"), y = pr.gen("y");
    pr.relations.push_back({"r", y * x - Coefficient::q_power(1) * x * y});
    auto sys = orient(pr);
    auto nf = normalize(y * y * x, sys);
    EXPECT_EQ(nf, Coefficient::q_power(2) * x * y * y);
    auto rep = check_confluence(sys, 4);
    EXPECT_TRUE(rep.confluent);
}
