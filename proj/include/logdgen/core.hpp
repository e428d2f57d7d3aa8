#pragma once

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace logdgen {

// Raised when an input is well-formed but violates a mathematical precondition.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient (b-1)/b of a standard boundary; b may be infinite.
struct StandardCoeff {
    long b = 1;
    bool infinite = false;

    static StandardCoeff finite(long b) {
        if (b < 1) throw DomainError("standard coefficient needs b >= 1");
        return {b, false};
    }
    static StandardCoeff infinity() { return {0, true}; }

    Rational value() const { return infinite ? Rational(1) : Rational(b - 1, b); }

    // Inverse of value(): c = (b-1)/b, with c = 1 mapping to infinity.
    static std::optional<StandardCoeff> from_value(const Rational& c) {
        if (c == 1) return infinity();
        if (c < 0 || c > 1) return std::nullopt;
        Rational b = Rational(1) / (Rational(1) - c);
        if (!b.is_integer()) return std::nullopt;
        return finite(static_cast<long>(b.num()));
    }

    std::string str() const { return infinite ? std::string("inf") : std::to_string(b); }

    friend bool operator==(const StandardCoeff& x, const StandardCoeff& y) {
        return x.infinite == y.infinite && (x.infinite || x.b == y.b);
    }
    friend auto operator<=>(const StandardCoeff& x, const StandardCoeff& y) {
        if (x.infinite != y.infinite) return x.infinite <=> y.infinite;
        return x.infinite ? std::strong_ordering::equal : x.b <=> y.b;
    }
};

// Cyclic quotient germ of order n met by k_b boundary branches of coefficient (b-1)/b.
struct GermBoundaryData {
    long n = 1;
    std::map<long, long> k;

    long branch_count() const {
        long s = 0;
        for (auto& [b, c] : k) s += c;
        return s;
    }
};

enum class MpCase { CASE1, CASE2, CASE3, NOT_LC };

inline const char* to_string(MpCase c) {
    switch (c) {
        case MpCase::CASE1: return "CASE1";
        case MpCase::CASE2: return "CASE2";
        case MpCase::CASE3: return "CASE3";
        case MpCase::NOT_LC: return "NOT_LC";
    }
    return "?";
}

struct MpResult {
    Rational value;
    MpCase label;
};

// Multiplicity of the different at a point of a boundary curve.
inline MpResult m_p(const GermBoundaryData& d) {
    if (d.n < 1) throw DomainError("m_p: n must be positive");
    Rational v(d.n - 1, d.n);
    std::map<long, long> support;
    for (auto& [b, c] : d.k) {
        if (b < 2) throw DomainError("m_p: boundary index b must be >= 2");
        if (c < 0) throw DomainError("m_p: negative k_b");
        if (c == 0) continue;
        support[b] = c;
        v += Rational(b - 1, b) * Rational(c, d.n);
    }
    MpCase label = MpCase::NOT_LC;
    if (v <= 1) {
        if (support.empty())
            label = MpCase::CASE1;
        else if (support.size() == 1 && support.begin()->second == 1)
            label = MpCase::CASE2;
        else if (support.size() == 1 && support.begin()->first == 2 && support.begin()->second == 2)
            label = MpCase::CASE3;
    }
    return {v, label};
}

// Coefficient of the extracted divisor over p.
inline Rational s_extraction_coeff(const GermBoundaryData& d, const Rational& strict_local_intersection) {
    auto [v, label] = m_p(d);
    switch (label) {
        case MpCase::CASE1:
        case MpCase::CASE2:
            return v;
        case MpCase::CASE3: {
            if (!(strict_local_intersection * 2).is_integer())
                throw DomainError("s_extraction_coeff: intersection not in (1/2)Z");
            Rational r = Rational(1) - strict_local_intersection;
            if (r != 0 && r != Rational(1, 2) && r != 1)
                throw DomainError("s_extraction_coeff: inconsistent germ, coefficient " + r.str());
            return r;
        }
        case MpCase::NOT_LC:
            break;
    }
    throw DomainError("s_extraction_coeff: germ is not log canonical");
}

using Multiset = std::vector<Rational>;

// Descending by value, ties broken by denominator.
inline bool canonical_before(const Rational& a, const Rational& b) {
    if (a != b) return a > b;
    return a.den() < b.den();
}

// Lists every multiset over `allowed` of size <= max_len with the given sum.
// Each multiset is sorted descending; the list is ordered by size (largest
// first) and then lexicographically.
inline std::vector<Multiset> enumerate_boundary_multisets(const std::set<Rational>& allowed,
                                                          const Rational& target, int max_len) {
    std::vector<Rational> vals(allowed.begin(), allowed.end());
    for (auto& v : vals)
        if (v <= 0) throw DomainError("enumerate_boundary_multisets: values must be positive");
    std::sort(vals.begin(), vals.end(), canonical_before);

    std::vector<Multiset> out;
    Multiset cur;
    auto rec = [&](auto&& self, std::size_t from, const Rational& rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (std::size_t i = from; i < vals.size(); ++i) {
            if (vals[i] > rest) continue;
            cur.push_back(vals[i]);
            self(self, i, rest - vals[i]);
            cur.pop_back();
        }
    };
    if (target >= 0) rec(rec, 0, target);

    std::sort(out.begin(), out.end(), [](const Multiset& a, const Multiset& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return out;
}

inline BigInt index_lcm(const std::vector<Rational>& coeffs) {
    BigInt l = 1;
    for (auto& c : coeffs) l = lcm(l, c.den());
    return l;
}

// Euler number of a double cover of P^1 with the given number of branch points.
inline long hurwitz_double_cover_euler(long branch_count) {
    if (branch_count < 0) throw DomainError("hurwitz: negative branch count");
    if (branch_count % 2 != 0) throw DomainError("hurwitz: odd branch count, no double cover");
    return 4 - branch_count;
}

}  // namespace logdgen
