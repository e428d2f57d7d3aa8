#pragma once
// Configurations shared by the fibration unit tests and the acceptance run.

#include <logdgen/fibration.hpp>

#include <initializer_list>
#include <vector>

namespace logdgen::testdata {

using P = HorizontalProfile;

inline FibreTypeLabel L(FibreKind k, long b, long kk = 0) { return FibreTypeLabel::make(k, StandardCoeff::finite(b), kk); }
inline FibreTypeLabel Linf(FibreKind k) { return FibreTypeLabel::make(k, StandardCoeff::infinity()); }

inline std::vector<FibreTypeLabel> rep(int n, FibreTypeLabel l) { return std::vector<FibreTypeLabel>(n, l); }

inline std::vector<FibreTypeLabel> cat(std::initializer_list<std::vector<FibreTypeLabel>> parts) {
    std::vector<FibreTypeLabel> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

struct Case {
    const char* name;
    TypRecord rec;
    P profile;
    long genus;
};

inline const FibreTypeLabel II1_GEN = L(FibreKind::II1, 1);
inline const FibreTypeLabel I1_GEN = L(FibreKind::I1, 1);

inline std::vector<Case> type_ii_cases() {
    using K = FibreKind;
    return {
        {"a1", {{}, II1_GEN}, P::BISECTION, 1},
        {"a2", {{}, II1_GEN}, P::TWO_SECTIONS, 1},
        {"a3", {{}, I1_GEN}, P::SECTION_ONLY, 1},
        {"a4", {{}, I1_GEN}, P::SECTION_ONLY, 1},
        {"b1", {rep(4, L(K::I1, 2)), I1_GEN}, P::SECTION_ONLY, 0},
        {"b2", {rep(3, L(K::I1, 3)), I1_GEN}, P::SECTION_ONLY, 0},
        {"b3", {cat({{L(K::I1, 2)}, rep(2, L(K::I1, 4))}), I1_GEN}, P::SECTION_ONLY, 0},
        {"b4", {{L(K::I1, 2), L(K::I1, 3), L(K::I1, 6)}, I1_GEN}, P::SECTION_ONLY, 0},
        {"c1", {rep(4, L(K::II1, 2)), II1_GEN}, P::TWO_SECTIONS, 0},
        {"c2", {rep(3, L(K::II1, 3)), II1_GEN}, P::TWO_SECTIONS, 0},
        {"c3", {cat({{L(K::II1, 2)}, rep(2, L(K::II1, 4))}), II1_GEN}, P::TWO_SECTIONS, 0},
        {"c4", {{L(K::II1, 2), L(K::II1, 3), L(K::II1, 6)}, II1_GEN}, P::TWO_SECTIONS, 0},
        {"d1", {rep(4, L(K::I2, 1)), II1_GEN}, P::BISECTION, 0},
        {"d2", {rep(4, L(K::I3, 1)), I1_GEN}, P::SECTION_ONLY, 0},
        {"d3", {cat({rep(2, L(K::I1, 2)), rep(2, L(K::I3, 1))}), I1_GEN}, P::SECTION_ONLY, 0},
        {"d4", {{L(K::I1, 4), L(K::I3, 2), L(K::I3, 1)}, I1_GEN}, P::SECTION_ONLY, 0},
        {"d5", {cat({rep(2, L(K::I3, 2)), {L(K::I1, 2)}}), I1_GEN}, P::SECTION_ONLY, 0},
        {"d6", {{L(K::I1, 3), L(K::I3, 1), L(K::I3, 3)}, I1_GEN}, P::SECTION_ONLY, 0},
        {"e1", {cat({rep(2, L(K::I2, 2)), {L(K::II1, 2)}}), II1_GEN}, P::BISECTION, 0},
        {"e2", {cat({rep(2, L(K::I2, 1)), rep(2, L(K::II1, 2))}), II1_GEN}, P::BISECTION, 0},
        {"e3", {{L(K::I2, 1), L(K::I2, 3), L(K::II1, 3)}, II1_GEN}, P::BISECTION, 0},
        {"e4", {{L(K::I2, 1), L(K::I2, 2), L(K::II1, 4)}, II1_GEN}, P::BISECTION, 0},
    };
}


}  // namespace logdgen::testdata
