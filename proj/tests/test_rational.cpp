#include <logdgen/rational.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

using logdgen::BigInt;
using logdgen::Rational;

TEST(Rational, NormalizesOnConstruction) {
    Rational q(6, -4);
    EXPECT_EQ(q.num(), -3);
    EXPECT_EQ(q.den(), 2);
    EXPECT_EQ(Rational(0, 7).den(), 1);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(Rational(8, 4).str(), "2");
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(2, 3), Rational(-1, 6));
    EXPECT_EQ(Rational(3, 4) * Rational(2, 9), Rational(1, 6));
    EXPECT_EQ(Rational(3, 4) / Rational(3, 8), Rational(2));
    EXPECT_EQ(-Rational(1, 5), Rational(-1, 5));
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(Rational, Floor) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-4, 2).floor(), -2);
}

TEST(Rational, ZeroDenominatorAndDivision) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (auto s : {"0", "5", "-5", "3/4", "-7/12", "123456789012345678901234567890/11"})
        EXPECT_EQ(Rational::parse(s).str(), s);
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    EXPECT_EQ(Rational::parse(" +3 / 9 "), Rational(1, 3));
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, BigValuesStayExact) {
    BigInt big = logdgen::ipow(BigInt(3), 200);
    Rational q(big + 1, big);
    EXPECT_EQ(q - Rational(1), Rational(BigInt(1), big));
    EXPECT_EQ(logdgen::lcm(BigInt(4), BigInt(6)), 12);
}
