#pragma once

#include "core.hpp"
#include "dualgraph.hpp"
#include "tables.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace logdgen {

struct FibreInvariants {
    long ell = 1;
    Rational mu = 0;
    long b = 1;
    Rational s = 0;
};

inline Rational s_star(long b, long ell, const Rational& mu) {
    if (ell < 1 || b < 1) throw DomainError("s_star: b and ell must be positive");
    if (mu < 0) throw DomainError("s_star: mu must be non-negative");
    return Rational(b) * (Rational(ell - 1, ell) - mu);
}

inline FibreInvariants make_invariants(long ell, Rational mu, long b = 1) {
    Rational s = s_star(b, ell, mu);
    return {ell, std::move(mu), b, std::move(s)};
}

// Invariants of an elliptic fibre; m is the multiplicity of an I_b fibre.
inline FibreInvariants elliptic_table(const KodairaLabel& k, long m = 1) {
    switch (k.kind) {
        case KodairaLabel::SMOOTH:
        case KodairaLabel::I:
            if (m < 1) throw DomainError("elliptic_table: m must be positive");
            return make_invariants(m, 0);
        case KodairaLabel::I_STAR: return make_invariants(2, 0);
        case KodairaLabel::II: return make_invariants(6, Rational(2, 3));
        case KodairaLabel::II_STAR: return make_invariants(6, 0);
        case KodairaLabel::III: return make_invariants(4, Rational(1, 2));
        case KodairaLabel::III_STAR: return make_invariants(4, 0);
        case KodairaLabel::IV: return make_invariants(3, Rational(1, 3));
        case KodairaLabel::IV_STAR: return make_invariants(3, 0);
    }
    throw DomainError("elliptic_table: no column for " + k.str());
}

inline bool validate_fibre_invariants(const FibreInvariants& inv) {
    if (inv.ell < 1 || inv.b < 1 || inv.mu < 0) return false;
    if (inv.s != Rational(inv.b) * (Rational(inv.ell - 1, inv.ell) - inv.mu)) return false;
    if (inv.s < 0) return false;
    return (inv.s == 0) == (inv.ell == 1);
}

struct PrimitiveVector {
    int kind = 1;  // 1 or 2
    long r = 1;
    std::array<long, 3> a{};

    static PrimitiveVector make(int kind, long r, std::array<long, 3> a) {
        PrimitiveVector v{kind, r, a};
        v.validate();
        return v;
    }

    void validate() const {
        if (kind != 1 && kind != 2) throw DomainError("primitive vector: kind must be V1 or V2");
        if (r < 1) throw DomainError("primitive vector: r must be positive");
        long sum = 0;
        for (long x : a) {
            if (x < 0 || x >= r) throw DomainError("primitive vector: entries must lie in [0, r)");
            sum += x;
        }
        if (sum >= r) throw DomainError("primitive vector: entries must sum below r");
        if (kind == 1 && std::gcd(r, a[2]) != 1) throw DomainError("primitive vector: gcd(r, a2) != 1 for V1");
    }

    // Multiplicity numerator of the boundary along the extracted divisor.
    long weight() const { return kind == 1 ? a[2] : a[0] + a[1]; }

    // Smallest d with d | ell forced by integrality of ell * weight / r.
    long divisibility() const { return r / std::gcd(r, weight()); }

    std::string str() const {
        return std::string(kind == 1 ? "V1" : "V2") + "(1/" + std::to_string(r) + ")(" + std::to_string(a[0]) + "," +
               std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
    }
};

inline Rational mu_star(const PrimitiveVector& v, long ell) {
    v.validate();
    if (ell < 1) throw DomainError("mu_star: ell must be positive");
    long w = v.weight();
    if (w == 0) throw DomainError("mu_star: zero denominator");
    return Rational(v.r - (v.a[0] + v.a[1] + v.a[2]), ell * w);
}

struct QuotientCheck {
    int row;
    PrimitiveVector vector;
    Rational c_star;  // mu * ell
    long divisibility;
    std::array<long, 2> ells;
    std::array<Rational, 2> mu;
    std::array<Rational, 2> s;
    bool matches;
};

inline bool in_c_star_set(const Rational& c) {
    for (auto& [p, q] : tables::c_star_values)
        if (c == Rational(p, q)) return true;
    return false;
}

// Recomputes every quotient row at ell = r and ell = 2r and compares with the
// literal closed forms.
inline std::vector<QuotientCheck> regenerate_table_vi_vii() {
    std::vector<QuotientCheck> out;
    for (auto& row : tables::table_vi_vii) {
        auto v = PrimitiveVector::make(row.kind, row.r, {row.a0, row.a1, row.a2});
        QuotientCheck q{row.row, v, mu_star(v, 1), v.divisibility(), {row.r, 2L * row.r}, {}, {}, true};
        for (int i = 0; i < 2; ++i) {
            long ell = q.ells[i];
            q.mu[i] = mu_star(v, ell);
            q.s[i] = s_star(1, ell, q.mu[i]);
            Rational mu_lit(row.mu_num, static_cast<long>(row.mu_den) * ell);
            Rational s_lit(static_cast<long>(row.s_w) * ell - row.s_q, static_cast<long>(row.s_w) * ell);
            if (q.mu[i] != mu_lit || q.s[i] != s_lit) q.matches = false;
        }
        if (q.divisibility != row.div || !in_c_star_set(q.c_star) || q.c_star == 0) q.matches = false;
        out.push_back(q);
    }
    return out;
}

inline long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

// lcm of all n with phi(n) <= x.
inline BigInt n_of_x(long x) {
    if (x < 1) throw DomainError("n_of_x: x must be positive");
    long bound = 2 * x * x + 4;
    BigInt l = 1;
    for (long n = 1; n <= bound; ++n)
        if (euler_phi(n) <= x) l = lcm(l, BigInt(n));
    // phi(n) >= sqrt(n/2) puts every admissible n at or below 2x^2.
    for (long n = 2 * x * x + 1; n <= bound; ++n)
        if (euler_phi(n) <= x) throw std::logic_error("n_of_x: search bound violated");
    return l;
}

inline bool is_prime(long q) {
    if (q < 2) return false;
    for (long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

// Order of Sp(2g, F_q).
inline BigInt sp_order(long g, long q) {
    if (g < 1) throw DomainError("sp_order: g must be positive");
    if (!is_prime(q)) throw DomainError("sp_order: q must be prime");
    BigInt r = ipow(BigInt(q), static_cast<unsigned>(g * g));
    for (long i = 1; i <= g; ++i) r *= ipow(BigInt(q), static_cast<unsigned>(2 * i)) - 1;
    return r;
}

// Bound on the number of singular fibres; n_va is the very-ampleness exponent
// for level-3 Siegel space in genus 16, which is not determined here.
inline BigInt fibre_bound(long d, long n_va) {
    if (d < 1 || n_va < 1) throw DomainError("fibre_bound: d and n_va must be positive");
    return BigInt(16) * d * n_va * sp_order(16, 3);
}

struct MoriSolution {
    long u;
    long v;
};

inline std::optional<MoriSolution> mori_feasible(const Rational& s, long b, long N) {
    if (b < 1 || N < 1) throw DomainError("mori_feasible: b and N must be positive");
    if (s < 0 || s >= b) throw DomainError("mori_feasible: need 0 <= s < b");
    long limit = b * N * static_cast<long>(s.den());
    for (long u = 1; u <= limit; ++u) {
        Rational v = Rational(N * u) * (Rational(b) - s);
        if (v.is_integer() && v > 0 && v <= b * N) return MoriSolution{u, static_cast<long>(v.num())};
    }
    return std::nullopt;
}

}  // namespace logdgen
