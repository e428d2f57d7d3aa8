#pragma once

#include "core.hpp"
#include "tables.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logdgen {

enum class Family { A, D, E };

struct DuValType {
    Family family = Family::A;
    int index = 1;

    static DuValType make(Family f, int n) {
        DuValType t{f, n};
        t.validate();
        return t;
    }
    static DuValType A(int n) { return make(Family::A, n); }
    static DuValType D(int n) { return make(Family::D, n); }
    static DuValType E(int n) { return make(Family::E, n); }

    void validate() const {
        bool ok = (family == Family::A && index >= 1) || (family == Family::D && index >= 4) ||
                  (family == Family::E && index >= 6 && index <= 8);
        if (!ok) throw DomainError("invalid Du Val type " + str());
    }

    int curve_count() const { return index; }

    std::string str() const {
        const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
        return std::string(f) + "_" + std::to_string(index);
    }

    // Accepts "A3" or "A_3".
    static DuValType parse(std::string s) {
        if (s.size() < 2) throw std::invalid_argument("bad Du Val type '" + s + "'");
        Family f;
        switch (s[0]) {
            case 'A': f = Family::A; break;
            case 'D': f = Family::D; break;
            case 'E': f = Family::E; break;
            default: throw std::invalid_argument("bad Du Val type '" + s + "'");
        }
        std::string rest = s.substr(s[1] == '_' ? 2 : 1);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad Du Val type '" + s + "'");
        return make(f, std::stoi(rest));
    }

    friend bool operator==(const DuValType&, const DuValType&) = default;
    friend auto operator<=>(const DuValType&, const DuValType&) = default;
};

// Order of the local fundamental group (binary polyhedral order for D and E).
inline long duval_order(const DuValType& t) {
    t.validate();
    switch (t.family) {
        case Family::A: return t.index + 1;
        case Family::D: return 4L * (t.index - 2);
        case Family::E: return t.index == 6 ? 24 : t.index == 7 ? 48 : 120;
    }
    return 0;
}

// Euler number of the exceptional tree of rational curves.
inline long exceptional_euler(const DuValType& t) {
    t.validate();
    return t.curve_count() + 1;
}

// Index-r quotient of a Du Val point by its canonical cover; case 0 is a
// Gorenstein point carrying its own type.
struct CoverCase {
    int case_id = 1;
    long r = 2;
    long n = 1;
    std::optional<DuValType> gorenstein_type;

    static CoverCase make(int case_id, long r, long n = 0) {
        CoverCase c{case_id, r, n, std::nullopt};
        c.validate();
        return c;
    }
    static CoverCase gorenstein(DuValType t) {
        t.validate();
        return CoverCase{0, 1, 0, t};
    }

    bool has_n() const { return case_id == 1 || case_id == 2 || case_id == 3 || case_id == 5; }

    void validate() const {
        auto bad = [&](const std::string& why) {
            throw DomainError("cover case " + std::to_string(case_id) + ": " + why);
        };
        switch (case_id) {
            case 0: if (!gorenstein_type) bad("missing type"); break;
            case 1: if (r < 2 || n < 1) bad("needs r >= 2, n >= 1"); break;
            case 2: if (r != 4 || n < 2) bad("needs r = 4, n >= 2"); break;
            case 3: if (r != 2 || n < 2) bad("needs r = 2, n >= 2"); break;
            case 4: if (r != 3) bad("needs r = 3"); break;
            case 5: if (r != 2 || n < 3) bad("needs r = 2, n >= 3"); break;
            case 6: if (r != 2) bad("needs r = 2"); break;
            default: bad("unknown case");
        }
    }

    // Type of the point downstairs.
    DuValType base() const {
        switch (case_id) {
            case 0: return *gorenstein_type;
            case 1: return DuValType::A(static_cast<int>(r * n - 1));
            case 2: return DuValType::D(static_cast<int>(2 * n + 1));
            case 3: return DuValType::D(static_cast<int>(n + 2));
            case 4: return DuValType::E(6);
            case 5: return DuValType::D(static_cast<int>(2 * n));
            case 6: return DuValType::E(7);
        }
        throw DomainError("unknown case");
    }

    // Type of the canonical cover; empty when the cover is smooth.
    std::optional<DuValType> cover() const {
        switch (case_id) {
            case 0: return gorenstein_type;
            case 1: return n == 1 ? std::nullopt : std::optional(DuValType::A(static_cast<int>(n - 1)));
            case 2: return DuValType::A(static_cast<int>(2 * n - 2));
            case 3: return DuValType::A(static_cast<int>(2 * n - 1));
            case 4: return DuValType::D(4);
            case 5: return DuValType::D(static_cast<int>(n + 1));
            case 6: return DuValType::E(6);
        }
        throw DomainError("unknown case");
    }

    std::string str() const {
        if (case_id == 0) return "gorenstein(" + gorenstein_type->str() + ")";
        std::string s = "case" + std::to_string(case_id) + "(r=" + std::to_string(r);
        if (has_n()) s += ",n=" + std::to_string(n);
        return s + ")";
    }
};

inline Rational c_p(const CoverCase& c) {
    c.validate();
    switch (c.case_id) {
        case 0: return 0;
        case 1: return Rational(c.n) * (Rational(c.r) - Rational(1, c.r));
        case 2: return Rational(3 * (2 * c.n + 3), 4);
        case 3: return 3;
        case 4: return Rational(16, 3);
        case 5: return Rational(3 * c.n, 2);
        case 6: return Rational(9, 2);
    }
    throw DomainError("unknown case");
}

inline Rational delta_p(const CoverCase& c) {
    DuValType t = c.base();
    return Rational(exceptional_euler(t)) - Rational(1, duval_order(t)) - c_p(c);
}

struct DuValRecord {
    CoverCase cover;
    long e_p;
    long o_p;
    Rational c_p;
    Rational delta_p;
};

inline DuValRecord duval_record(const CoverCase& c) {
    DuValType t = c.base();
    return {c, exceptional_euler(t), duval_order(t), logdgen::c_p(c), logdgen::delta_p(c)};
}

// Closed forms of the cover-case table, written independently of the
// e - 1/o - c evaluation above.
inline DuValRecord table_i_closed_form(const CoverCase& c) {
    c.validate();
    const long r = c.r, n = c.n;
    switch (c.case_id) {
        case 1: return {c, r * n, r * n, Rational(n) * (Rational(r) - Rational(1, r)), Rational(n * n - 1, r * n)};
        case 2: return {c, 2 * n + 2, 8 * n - 4, Rational(3 * (2 * n + 3), 4), Rational(n * (n - 1), 2 * n - 1)};
        case 3: return {c, n + 3, 4 * n, 3, Rational(4 * n * n - 1, 4 * n)};
        case 4: return {c, 7, 24, Rational(16, 3), Rational(13, 8)};
        case 5: return {c, 2 * n + 1, 8 * (n - 1), Rational(3 * n, 2), Rational(4 * n * n + 4 * n - 9, 8 * (n - 1))};
        case 6: return {c, 8, 48, Rational(9, 2), Rational(167, 48)};
    }
    throw DomainError("table_i_closed_form: no row for " + c.str());
}

// Parameter grid: case 1 with 2 <= r <= max_r, 1 <= n <= max_n1; cases 2, 3, 5
// with n up to max_n; cases 4 and 6 once.
inline std::vector<CoverCase> cover_case_grid(long max_r = 12, long max_n1 = 6, long max_n = 8) {
    std::vector<CoverCase> out;
    for (long r = 2; r <= max_r; ++r)
        for (long n = 1; n <= max_n1; ++n) out.push_back(CoverCase::make(1, r, n));
    for (long n = 2; n <= max_n; ++n) out.push_back(CoverCase::make(2, 4, n));
    for (long n = 2; n <= max_n; ++n) out.push_back(CoverCase::make(3, 2, n));
    out.push_back(CoverCase::make(4, 3));
    for (long n = 3; n <= max_n; ++n) out.push_back(CoverCase::make(5, 2, n));
    out.push_back(CoverCase::make(6, 2));
    return out;
}

// "2A3+A1" style sums; "" or "0" is the empty sum.
inline std::vector<DuValType> parse_singularity_sum(const std::string& s) {
    std::vector<DuValType> out;
    if (s.empty() || s == "0") return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t plus = s.find('+', pos);
        std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        std::size_t i = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
        int mult = i == 0 ? 1 : std::stoi(term.substr(0, i));
        DuValType t = DuValType::parse(term.substr(i));
        for (int j = 0; j < mult; ++j) out.push_back(t);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return out;
}

inline std::string singularity_sum_str(std::vector<DuValType> ts) {
    if (ts.empty()) return "0";
    std::sort(ts.begin(), ts.end(), [](const DuValType& a, const DuValType& b) { return b < a; });
    std::string out;
    for (std::size_t i = 0; i < ts.size();) {
        std::size_t j = i;
        while (j < ts.size() && ts[j] == ts[i]) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += std::to_string(j - i);
        std::string name = ts[i].str();
        name.erase(1, 1);
        out += name;
        i = j;
    }
    return out;
}

struct DelPezzoEntry {
    int row;
    int degree;
    std::vector<DuValType> singularities;
    Rational e_orb;
};

// Topological Euler number of a rank one Gorenstein log del Pezzo of degree d.
inline long delpezzo_e_top(int degree, const std::vector<DuValType>& sing) {
    long curves = 0;
    for (auto& t : sing) curves += t.curve_count();
    return 12 - degree - curves;
}

inline Rational delpezzo_e_orb(int degree, const std::vector<DuValType>& sing) {
    Rational e = delpezzo_e_top(degree, sing);
    for (auto& t : sing) e -= Rational(1) - Rational(1, duval_order(t));
    return e;
}

// Rank one Gorenstein log del Pezzo types with e_orb recomputed from the
// degree and singularities (not copied from the literal column).
inline std::vector<DelPezzoEntry> delpezzo_catalog() {
    std::vector<DelPezzoEntry> out;
    for (auto& row : tables::table_iv) {
        auto sing = parse_singularity_sum(row.sing);
        out.push_back({row.row, row.degree, sing, delpezzo_e_orb(row.degree, sing)});
    }
    return out;
}

// Nodal rational boundary on a del Pezzo: e_orb(S) must equal e_top of the
// boundary, an integer.
inline bool check_delpezzo_boundary(const DelPezzoEntry& e, long boundary_e_top) {
    return e.e_orb.is_integer() && e.e_orb == Rational(boundary_e_top);
}

}  // namespace logdgen
