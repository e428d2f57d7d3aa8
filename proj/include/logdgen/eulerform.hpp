#pragma once

#include "core.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace logdgen {

inline Rational orbifold_euler(long e_top, const std::vector<long>& orders) {
    Rational e = e_top;
    for (long o : orders) {
        if (o < 1) throw DomainError("orbifold_euler: orders must be positive");
        e -= Rational(1) - Rational(1, o);
    }
    return e;
}

// Correction term of the cyclic quotient 1/r(a,-a) twisted by l.
inline Rational rr_correction_cyclic(long r, long a, long l) {
    if (r < 1) throw DomainError("rr_correction_cyclic: r must be positive");
    if (std::gcd(a, r) != 1) throw DomainError("rr_correction_cyclic: gcd(a, r) != 1");
    long abar = ((a * l) % r + r) % r;
    return -Rational(abar * (r - abar), 2 * r);
}

inline Rational rr_correction_sum(long r, long a, long m) {
    if (m < 1 || r < 1 || m % r != 0) throw DomainError("rr_correction_sum: r must divide m");
    Rational s = 0;
    for (long l = 1; l < m; ++l) s += rr_correction_cyclic(r, a, l);
    return s;
}

inline Rational rr_correction_closed_form(long r, long m) { return -Rational(m * (r * r - 1), 12 * r); }

struct ChiComponent {
    long m;
    Rational chi;
    Rational d_cubed;
    Rational d_sq_k;
};

struct ChiInput {
    std::vector<ChiComponent> components;
    Rational total_d_cubed;
    Rational total_d_sq_k;
    std::vector<std::pair<long, std::vector<Rational>>> corrections;
};

inline Rational chi_structure_sheaf(const ChiInput& in, bool generalized) {
    if (in.components.empty()) throw DomainError("chi_structure_sheaf: no components");
    Rational chi = 0, cubes = 0, sq = 0;
    for (auto& c : in.components) {
        chi += Rational(c.m) * c.chi;
        cubes += Rational(c.m) * c.d_cubed;
        sq += Rational(c.m) * c.d_sq_k;
    }
    Rational v = chi + (in.total_d_cubed - cubes) / 6 + (in.total_d_sq_k - sq) / 4;
    if (generalized)
        for (auto& [m, cs] : in.corrections)
            for (auto& c : cs) v -= Rational(m) * c / 12;
    return v;
}

struct FibreComponentData {
    long m;
    Rational e_orb;
    std::vector<Rational> deltas;
};

inline Rational euler_degenerate_fibre(const std::vector<FibreComponentData>& comps) {
    Rational e = 0;
    for (auto& c : comps) {
        Rational t = c.e_orb;
        for (auto& d : c.deltas) t += d;
        e += Rational(c.m) * t;
    }
    return e;
}

// True when every orbifold Euler number and every delta vanishes.
inline bool chi_zero_consistent(const std::vector<FibreComponentData>& comps) {
    for (auto& c : comps) {
        if (c.e_orb != 0) return false;
        for (auto& d : c.deltas)
            if (d != 0) return false;
    }
    return true;
}

inline Rational noether_e_top(const Rational& chi, const Rational& k_sq, const std::vector<long>& e_p) {
    Rational e = Rational(12) * chi - k_sq;
    for (long x : e_p) e -= Rational(x - 1);
    return e;
}

enum class Type3Sing { FOUR_A1, THREE_A2, A1_2A3, A1_A2_A5 };

inline Type3Sing parse_type3_sing(const std::string& s) {
    if (s == "4A1") return Type3Sing::FOUR_A1;
    if (s == "3A2") return Type3Sing::THREE_A2;
    if (s == "A1+2A3" || s == "2A3+A1") return Type3Sing::A1_2A3;
    if (s == "A1+A2+A5" || s == "A5+A2+A1") return Type3Sing::A1_A2_A5;
    throw std::invalid_argument("unknown singularity set '" + s + "'");
}

inline long type3_numerology(Type3Sing sing, long rho, long s) {
    if (rho < 1) throw DomainError("type3_numerology: rho must be positive");
    if (s < 0 || s > 2) throw DomainError("type3_numerology: s must be 0, 1 or 2");
    long k = 0;
    switch (sing) {
        case Type3Sing::FOUR_A1: k = 8; break;
        case Type3Sing::THREE_A2: k = 6; break;
        case Type3Sing::A1_2A3: k = 5; break;
        case Type3Sing::A1_A2_A5: k = 4; break;
    }
    return -2 * rho - s + k;
}

inline Rational rank_one_square(long d, const Rational& gamma_dot_d) {
    if (d == 0) throw DomainError("rank_one_square: d = 0");
    return Rational(2, d) * gamma_dot_d * gamma_dot_d;
}

}  // namespace logdgen
