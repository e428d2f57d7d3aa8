#pragma once

#include "core.hpp"
#include "dualgraph.hpp"

#include <string>
#include <vector>

namespace logdgen {

// Special fibres and the generic fibre of a conic fibration with boundary.
struct TypRecord {
    std::vector<FibreTypeLabel> special;
    FibreTypeLabel generic;

    void validate() const {
        for (auto& l : special) l.validate();
        generic.validate();
        if (generic.k != 0 || generic.b.infinite) throw DomainError("generic fibre needs finite b and no k");
    }

    long count(FibreKind kind) const {
        long n = 0;
        for (auto& l : special) n += l.kind == kind;
        return n;
    }
};

enum class HorizontalProfile { TWO_SECTIONS, BISECTION, SECTION_ONLY };

inline const char* to_string(HorizontalProfile p) {
    switch (p) {
        case HorizontalProfile::TWO_SECTIONS: return "TWO_SECTIONS";
        case HorizontalProfile::BISECTION: return "BISECTION";
        case HorizontalProfile::SECTION_ONLY: return "SECTION_ONLY";
    }
    return "?";
}

inline HorizontalProfile parse_profile(const std::string& s) {
    if (s == "TWO_SECTIONS" || s == "two_sections") return HorizontalProfile::TWO_SECTIONS;
    if (s == "BISECTION" || s == "bisection") return HorizontalProfile::BISECTION;
    if (s == "SECTION_ONLY" || s == "section_only" || s == "section") return HorizontalProfile::SECTION_ONLY;
    throw std::invalid_argument("unknown horizontal profile '" + s + "'");
}

// Per-fibre share of the budget. Over a bisection this is the orbifold defect
// sum(1 - 1/o) of the fibre's quotient points; along a section it is the
// degree of the different at the fibre.
inline Rational fibre_budget(const FibreTypeLabel& l, HorizontalProfile p) {
    l.validate();
    Rational c = l.b.value();
    if (p == HorizontalProfile::BISECTION) {
        switch (l.kind) {
            case FibreKind::I2:
            case FibreKind::I3: return 1;  // two A_1 points
            case FibreKind::II3: return Rational(4 * l.k - 1, 4 * l.k);
            default: return 0;
        }
    }
    switch (l.kind) {
        case FibreKind::I1:
        case FibreKind::II1:
        case FibreKind::II2: return c;
        case FibreKind::I3: return (Rational(1) + c) / 2;
        default: break;
    }
    throw DomainError("fibre_budget: " + l.str() + " has no section profile");
}

inline Rational boundary_budget(const TypRecord& rec, HorizontalProfile p) {
    rec.validate();
    Rational s = 0;
    for (auto& l : rec.special) s += fibre_budget(l, p);
    return s;
}

// Numerical consistency of a fibration type with K + Delta trivial over a base
// of the given genus.
inline bool check_typ(const TypRecord& rec, HorizontalProfile p, long base_genus = 0) {
    rec.validate();
    if (base_genus < 0 || base_genus > 1) throw DomainError("check_typ: base genus must be 0 or 1");
    const long e_base = 2 - 2 * base_genus;
    const auto generic_is = [&](FibreKind k) { return rec.generic.kind == k && rec.generic.b == StandardCoeff::finite(1); };

    switch (p) {
        case HorizontalProfile::BISECTION: {
            if (!generic_is(FibreKind::II1)) return false;
            Rational diff = 0;
            bool cartier = true;
            for (auto& l : rec.special) {
                Rational c = l.b.value();
                if (!(l.b.infinite || l.b.b == 1)) cartier = false;
                switch (l.kind) {
                    case FibreKind::I2:
                    case FibreKind::II3: diff += c; break;  // one ramified contact
                    case FibreKind::II1: diff += 2 * c; break;
                    default: return false;
                }
            }
            long branch = rec.count(FibreKind::I2) + rec.count(FibreKind::II3);
            if (branch % 2 != 0) return false;
            long e_gamma = base_genus == 0 ? hurwitz_double_cover_euler(branch) : 2 * e_base - branch;
            if (e_gamma > 2) return false;  // a bisection is connected
            if (diff != Rational(e_gamma)) return false;
            // With K + Delta Cartier, e_orb(S - Delta) = 0 forces the orbifold
            // defect to equal the branch count.
            if (cartier && boundary_budget(rec, p) != Rational(branch)) return false;
            return true;
        }
        case HorizontalProfile::SECTION_ONLY: {
            if (!generic_is(FibreKind::I1)) return false;
            for (auto& l : rec.special)
                if (l.kind != FibreKind::I1 && l.kind != FibreKind::I3) return false;
            if (boundary_budget(rec, p) != Rational(e_base)) return false;
            // The half-boundary bisection branches over the (I-3) fibres.
            return rec.count(FibreKind::I3) % 2 == 0;
        }
        case HorizontalProfile::TWO_SECTIONS: {
            if (!generic_is(FibreKind::II1)) return false;
            for (auto& l : rec.special)
                if (l.kind != FibreKind::II1) return false;
            return boundary_budget(rec, p) == Rational(e_base);
        }
    }
    return false;
}

// Catalog labels are already normal forms for the elementary transformations.
inline FibreTypeLabel s_elementary_rewrite(const FibreTypeLabel& l) {
    l.validate();
    return l;
}

}  // namespace logdgen
