#pragma once

#include "core.hpp"
#include "dualgraph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace logdgen {

// Local height correction of a section meeting component i of a fibre.
// Component 0 meets the zero section. For I*_m, components 1..3 are the other
// simple ends (1 on the same side as 0) and 4.. are the double components.
inline Rational contribution(const KodairaLabel& f, long i) {
    if (i < 0) throw DomainError("contribution: negative component index");
    if (i == 0) return 0;
    if (f.kind == KodairaLabel::I && f.b >= 2) {
        if (i >= f.b) throw DomainError("contribution: component out of range for " + f.str());
        return Rational(i * (f.b - i), f.b);
    }
    if (f.kind == KodairaLabel::I_STAR && (f.b == 1 || f.b == 2)) {
        if (i == 1) return 1;
        if (i == 2 || i == 3) return f.b == 1 ? Rational(5, 4) : Rational(3, 2);
        throw DomainError("contribution: component " + std::to_string(i) + " of " + f.str() + " is not simple");
    }
    throw DomainError("contribution: unsupported fibre " + f.str());
}

// Pair correction; only the I*_1 far-component values are tabulated.
inline Rational pair_contribution(const KodairaLabel& f, long i, long j) {
    if (i == 0 || j == 0) return 0;
    if (f.kind == KodairaLabel::I_STAR && f.b == 1 && (i == 2 || i == 3) && (j == 2 || j == 3))
        return i == j ? Rational(5, 4) : Rational(3, 4);
    throw DomainError("pair_contribution: unsupported case on " + f.str());
}

inline Rational height_self(long chi, long po, const std::vector<Rational>& contribs) {
    Rational h = Rational(2 * chi + 2 * po);
    for (auto& c : contribs) h -= c;
    return h;
}

inline Rational height_pair(long chi, long po, long qo, long pq, const std::vector<Rational>& contribs) {
    Rational h = Rational(chi + po + qo - pq);
    for (auto& c : contribs) h -= c;
    return h;
}

struct SectionConfig {
    long po = 0;
    std::vector<long> hits;  // component met in each listed fibre

    friend bool operator==(const SectionConfig&, const SectionConfig&) = default;
    friend auto operator<=>(const SectionConfig&, const SectionConfig&) = default;
};

struct FibreSpec {
    KodairaLabel label;
    long components;
};

inline std::optional<Rational> try_contribution(const KodairaLabel& f, long i) {
    try {
        return contribution(f, i);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

// Every (PO, component hits) with the requested self-height, in lexicographic
// order. Components without a defined contribution are skipped.
inline std::vector<SectionConfig> solve_section_config(const Rational& target, const std::vector<FibreSpec>& fibres,
                                                       long chi, long po_max) {
    if (chi < 1) throw DomainError("solve_section_config: chi must be positive");
    std::vector<std::vector<std::pair<long, Rational>>> choices;
    for (auto& f : fibres) {
        if (f.components < 1) throw DomainError("solve_section_config: fibre needs components");
        std::vector<std::pair<long, Rational>> opts;
        for (long i = 0; i < f.components; ++i)
            if (auto c = try_contribution(f.label, i)) opts.emplace_back(i, *c);
        choices.push_back(std::move(opts));
    }
    std::vector<SectionConfig> out;
    SectionConfig cur;
    cur.hits.resize(fibres.size());
    auto rec = [&](auto&& self, std::size_t i, Rational spent) -> void {
        if (i == fibres.size()) {
            if (Rational(2 * chi + 2 * cur.po) - spent == target) out.push_back(cur);
            return;
        }
        for (auto& [idx, c] : choices[i]) {
            cur.hits[i] = idx;
            self(self, i + 1, spent + c);
        }
    };
    for (long po = 0; po <= po_max; ++po) {
        cur.po = po;
        rec(rec, 0, Rational(0));
    }
    return out;
}

}  // namespace logdgen
