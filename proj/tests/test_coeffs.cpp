#include <gtest/gtest.h>

#include <random>

#include "qheis/coeffs.hpp"

using namespace qheis;

namespace {

Coefficient q() { return Coefficient::q_power(1); }
Coefficient p() { return Coefficient::p_power(1); }
Coefficient one() { return Coefficient(1); }

}  // namespace

TEST(Coeffs, QNumberSumMatchesClosedForm) {
    for (int k = 1; k <= 6; ++k) EXPECT_TRUE(coeff_eq(qnumber(k), qnumber_closed_form(k))) << k;
    Coefficient three = q() * q() + q() * p().inverse() + p().pow(-2);
    EXPECT_TRUE(coeff_eq(qnumber(3), three));
}

TEST(Coeffs, QuotientCancels) {
    Coefficient a = q() - p().inverse();
    Coefficient b = q() * q() - p().pow(-2);
    Coefficient r = a.inverse() * b;
    EXPECT_TRUE(coeff_eq(r, q() + p().inverse()));
    EXPECT_TRUE(r.denominator().is_one());
}

TEST(Coeffs, DivisionByZeroThrows) {
    EXPECT_THROW(Coefficient(0).inverse(), DivisionByZero);
    EXPECT_THROW((q() - q()).inverse(), DivisionByZero);
}

TEST(Coeffs, HalfPowers) {
    Coefficient r = Coefficient::q_half_power(1);
    EXPECT_TRUE(coeff_eq(r * r, q()));
    EXPECT_TRUE(coeff_eq(Coefficient::q_half_power(-3) * Coefficient::q_half_power(3), one()));
}

TEST(Coeffs, EvalPoleAndUnbound) {
    Coefficient f = (q() - one()).inverse();
    Point at1{{"s", GaussRational(1)}, {"h", GaussRational(2)}};
    EXPECT_THROW(coeff_eval(f, at1), PoleAtPoint);
    EXPECT_THROW(coeff_eval(Coefficient::hbar_power(1) * f, Point{{"s", GaussRational(3)}}), UnboundVariable);
}
