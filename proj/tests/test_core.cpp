#include <logdgen/core.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace logdgen;

namespace {

GermBoundaryData germ(long n, std::map<long, long> k = {}) { return {n, std::move(k)}; }

}  // namespace

TEST(StandardCoeff, Values) {
    EXPECT_EQ(StandardCoeff::finite(1).value(), Rational(0));
    EXPECT_EQ(StandardCoeff::finite(4).value(), Rational(3, 4));
    EXPECT_EQ(StandardCoeff::infinity().value(), Rational(1));
    EXPECT_EQ(StandardCoeff::from_value(Rational(5, 6)), StandardCoeff::finite(6));
    EXPECT_EQ(StandardCoeff::from_value(Rational(1)), StandardCoeff::infinity());
    EXPECT_FALSE(StandardCoeff::from_value(Rational(2, 5)).has_value());
    EXPECT_THROW(StandardCoeff::finite(0), DomainError);
}

TEST(MP, ReferenceExamples) {
    auto a = m_p(germ(1));
    EXPECT_EQ(a.value, Rational(0));
    EXPECT_EQ(a.label, MpCase::CASE1);
    auto b = m_p(germ(1, {{2, 1}}));
    EXPECT_EQ(b.value, Rational(1, 2));
    EXPECT_EQ(b.label, MpCase::CASE2);
    auto c = m_p(germ(2, {{2, 2}}));
    EXPECT_EQ(c.value, Rational(1));
    EXPECT_EQ(c.label, MpCase::CASE3);
}

TEST(MP, CaseTwoMatchesClosedForm) {
    // (n-1)/n + (b-1)/(bn) = (bn-1)/(bn)
    for (long n = 1; n <= 6; ++n)
        for (long b = 2; b <= 7; ++b) {
            auto r = m_p(germ(n, {{b, 1}}));
            EXPECT_EQ(r.value, Rational(b * n - 1, b * n));
            EXPECT_EQ(r.label, MpCase::CASE2);
        }
}

TEST(MP, NotLcWhenValueExceedsOne) {
    auto r = m_p(germ(1, {{2, 3}}));
    EXPECT_EQ(r.value, Rational(3, 2));
    EXPECT_EQ(r.label, MpCase::NOT_LC);
    EXPECT_EQ(m_p(germ(1, {{3, 1}, {4, 1}})).label, MpCase::NOT_LC);
    EXPECT_THROW(m_p(germ(0)), DomainError);
    EXPECT_THROW(m_p(germ(1, {{1, 1}})), DomainError);
}

TEST(SExtraction, ReferenceExamples) {
    EXPECT_EQ(s_extraction_coeff(germ(1, {{3, 1}}), Rational(7)), Rational(2, 3));
    EXPECT_EQ(s_extraction_coeff(germ(2, {{2, 2}}), Rational(1, 2)), Rational(1, 2));
    EXPECT_EQ(s_extraction_coeff(germ(2, {{2, 2}}), Rational(1)), Rational(0));
    EXPECT_EQ(s_extraction_coeff(germ(2, {{2, 2}}), Rational(0)), Rational(1));
    EXPECT_THROW(s_extraction_coeff(germ(2, {{2, 2}}), Rational(1, 3)), DomainError);
    EXPECT_THROW(s_extraction_coeff(germ(2, {{2, 2}}), Rational(3, 2)), DomainError);
    EXPECT_THROW(s_extraction_coeff(germ(1, {{2, 3}}), Rational(0)), DomainError);
}

TEST(Multisets, FourFractionalPatterns) {
    std::set<Rational> allowed{Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(5, 6)};
    auto got = enumerate_boundary_multisets(allowed, Rational(2), 4);
    std::vector<Multiset> want = {
        {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)},
        {Rational(2, 3), Rational(2, 3), Rational(2, 3)},
        {Rational(3, 4), Rational(3, 4), Rational(1, 2)},
        {Rational(5, 6), Rational(2, 3), Rational(1, 2)},
    };
    EXPECT_EQ(got, want);
}

TEST(Multisets, TrivialCases) {
    auto one = enumerate_boundary_multisets({Rational(1, 2)}, Rational(1), 4);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], (Multiset{Rational(1, 2), Rational(1, 2)}));
    EXPECT_TRUE(enumerate_boundary_multisets({Rational(2, 3)}, Rational(1), 4).empty());
    auto zero = enumerate_boundary_multisets({Rational(1, 2)}, Rational(0), 3);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].empty());
    EXPECT_THROW(enumerate_boundary_multisets({Rational(0)}, Rational(1), 2), DomainError);
}

TEST(IndexLcm, Examples) {
    EXPECT_EQ(index_lcm({Rational(1, 2), Rational(3, 4), Rational(3, 4)}), 4);
    EXPECT_EQ(index_lcm({Rational(1, 2), Rational(2, 3), Rational(5, 6)}), 6);
    EXPECT_EQ(index_lcm({}), 1);
}

TEST(Hurwitz, Examples) {
    EXPECT_EQ(hurwitz_double_cover_euler(4), 0);
    EXPECT_EQ(hurwitz_double_cover_euler(2), 2);
    EXPECT_EQ(hurwitz_double_cover_euler(0), 4);
    EXPECT_THROW(hurwitz_double_cover_euler(3), DomainError);
    EXPECT_THROW(hurwitz_double_cover_euler(-2), DomainError);
}
