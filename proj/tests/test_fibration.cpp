#include <logdgen/duval.hpp>
#include <logdgen/fibration.hpp>

#include <gtest/gtest.h>

#include "typ_cases.hpp"

using namespace logdgen;
using namespace logdgen::testdata;

TEST(Budget, ReferenceExamples) {
    EXPECT_EQ(boundary_budget({rep(4, L(FibreKind::I2, 1)), II1_GEN}, P::BISECTION), Rational(4));
    EXPECT_EQ(boundary_budget({{L(FibreKind::I2, 1), L(FibreKind::I2, 1), Linf(FibreKind::II1)}, II1_GEN}, P::BISECTION),
              Rational(2));
    EXPECT_EQ(boundary_budget({{}, II1_GEN}, P::BISECTION), Rational(0));
    EXPECT_EQ(boundary_budget({{L(FibreKind::II3, 1, 2)}, II1_GEN}, P::BISECTION), Rational(7, 8));
}

TEST(Budget, SectionProfiles) {
    EXPECT_EQ(boundary_budget({{L(FibreKind::I3, 3)}, I1_GEN}, P::SECTION_ONLY), Rational(5, 6));
    EXPECT_EQ(boundary_budget({{L(FibreKind::II2, 4)}, II1_GEN}, P::TWO_SECTIONS), Rational(3, 4));
    EXPECT_THROW(boundary_budget({{L(FibreKind::I2, 1)}, I1_GEN}, P::SECTION_ONLY), DomainError);
}

TEST(CheckTyp, TwentyTwoConfigurations) {
    auto cases = type_ii_cases();
    ASSERT_EQ(cases.size(), 22u);
    for (auto& c : cases) EXPECT_TRUE(check_typ(c.rec, c.profile, c.genus)) << c.name;
}

TEST(CheckTyp, TypeThreeConfigurations) {
    TypRecord a{rep(2, Linf(FibreKind::II1)), II1_GEN};
    EXPECT_TRUE(check_typ(a, P::TWO_SECTIONS));
    TypRecord c{{L(FibreKind::I2, 1), L(FibreKind::I2, 1), Linf(FibreKind::II1)}, II1_GEN};
    EXPECT_TRUE(check_typ(c, P::BISECTION));
    // Case (b): del Pezzo rows whose orbifold Euler number equals that of a
    // nodal rational boundary curve.
    int hits = 0;
    for (auto& e : delpezzo_catalog())
        if (e.row == 8 || e.row == 14 || e.row == 20) hits += check_delpezzo_boundary(e, 1);
    EXPECT_EQ(hits, 3);
}

TEST(CheckTyp, Rejections) {
    EXPECT_FALSE(check_typ({rep(5, L(FibreKind::I2, 1)), II1_GEN}, P::BISECTION));
    EXPECT_FALSE(check_typ({rep(3, L(FibreKind::I2, 1)), II1_GEN}, P::BISECTION));
    EXPECT_FALSE(check_typ({rep(6, L(FibreKind::I2, 1)), II1_GEN}, P::BISECTION));
    EXPECT_FALSE(check_typ({rep(3, L(FibreKind::I1, 2)), I1_GEN}, P::SECTION_ONLY));
    EXPECT_FALSE(check_typ({rep(3, L(FibreKind::I3, 1)), I1_GEN}, P::SECTION_ONLY));
    EXPECT_FALSE(check_typ({rep(4, L(FibreKind::I2, 1)), I1_GEN}, P::BISECTION));
    EXPECT_FALSE(check_typ({{L(FibreKind::I2, 1)}, II1_GEN}, P::TWO_SECTIONS));
    // Wrong base: the a-configurations are not consistent over P^1.
    EXPECT_FALSE(check_typ({{}, II1_GEN}, P::TWO_SECTIONS, 0));
}

TEST(Rewrite, FixedPoints) {
    for (auto l : {L(FibreKind::II1, 3), L(FibreKind::I1, 2), L(FibreKind::II3, 2, 3), Linf(FibreKind::II2)}) {
        EXPECT_EQ(s_elementary_rewrite(l), l);
        EXPECT_EQ(s_elementary_rewrite(s_elementary_rewrite(l)), s_elementary_rewrite(l));
    }
}

TEST(TypRecord, Validation) {
    TypRecord bad{{}, FibreTypeLabel{FibreKind::II3, StandardCoeff::finite(1), 1}};
    EXPECT_THROW(bad.validate(), DomainError);
    EXPECT_THROW(FibreTypeLabel::make(FibreKind::I1, StandardCoeff::finite(2), 1), DomainError);
    EXPECT_THROW(FibreTypeLabel::make(FibreKind::II3, StandardCoeff::finite(2), 0), DomainError);
}
