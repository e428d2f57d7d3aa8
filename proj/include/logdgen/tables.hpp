#pragma once

// Literal table data, transcribed once and kept separate from the code that
// recomputes it so that every table is checked by double entry.

#include <array>

namespace logdgen::tables {

// Cover-case table: closed forms as functions of (r, n).
struct CoverRow {
    int case_id;
    const char* base;  // type downstairs, in terms of n and r
    const char* cover;
    const char* r;
    const char* n_range;
    const char* e_p;
    const char* o_p;
    const char* c_p;
    const char* delta_p;
};

inline constexpr std::array<CoverRow, 6> table_i = {{
    {1, "A_{rn-1}", "A_{n-1}", "r>=2", "n>=1", "rn", "rn", "n(r-1/r)", "(n^2-1)/(rn)"},
    {2, "D_{2n+1}", "A_{2n-2}", "4", "n>=2", "2n+2", "8n-4", "3(2n+3)/4", "n(n-1)/(2n-1)"},
    {3, "D_{n+2}", "A_{2n-1}", "2", "n>=2", "n+3", "4n", "3", "(4n^2-1)/(4n)"},
    {4, "E_6", "D_4", "3", "-", "7", "24", "16/3", "13/8"},
    {5, "D_{2n}", "D_{n+1}", "2", "n>=3", "2n+1", "8(n-1)", "3n/2", "(4n^2+4n-9)/(8(n-1))"},
    {6, "E_7", "E_6", "2", "-", "8", "48", "9/2", "167/48"},
}};

struct DelPezzoRow {
    int row;
    int degree;
    const char* sing;
    const char* e_orb;
};

inline constexpr std::array<DelPezzoRow, 27> table_iv = {{
    {1, 8, "A1", "5/2"},        {2, 6, "A2+A1", "11/6"},     {3, 5, "A4", "11/5"},
    {4, 4, "D5", "25/12"},      {5, 4, "A3+2A1", "5/4"},     {6, 3, "E6", "49/24"},
    {7, 3, "A5+A1", "5/3"},     {8, 3, "3A2", "1"},          {9, 2, "E7", "97/48"},
    {10, 2, "D6+A1", "25/16"},  {11, 2, "A7", "17/8"},       {12, 2, "D4+A3", "11/8"},
    {13, 2, "A5+A2", "3/2"},    {14, 2, "2A3+A1", "1"},      {15, 1, "E8", "241/120"},
    {16, 1, "E7+A1", "73/48"},  {17, 1, "E7+A2", "65/48"},   {18, 1, "A8", "19/9"},
    {19, 1, "A7+A1", "13/8"},   {20, 1, "A5+A2+A1", "1"},    {21, 1, "D8", "49/24"},
    {22, 1, "D6+2A1", "17/16"}, {23, 1, "D5+A3", "4/3"},     {24, 1, "2D4", "5/4"},
    {25, 1, "4A2", "1/3"},      {26, 1, "2A3+2A1", "1/2"},   {27, 1, "2A4", "7/5"},
}};

// Elliptic fibre invariants (ell, mu, s); the multiple-fibre column is
// parametric in m and stored as ell = 0.
struct EllipticRow {
    const char* label;
    int ell;
    const char* mu;
    const char* s;
};

inline constexpr std::array<EllipticRow, 8> table_v = {{
    {"mI_b", 0, "0", "(m-1)/m"},
    {"I*_b", 2, "0", "1/2"},
    {"II", 6, "2/3", "1/6"},
    {"II*", 6, "0", "5/6"},
    {"III", 4, "1/2", "1/4"},
    {"III*", 4, "0", "3/4"},
    {"IV", 3, "1/3", "1/3"},
    {"IV*", 3, "0", "2/3"},
}};

// Quotient rows: mu = mu_num / (mu_den * ell), s = (s_w * ell - s_q) / (s_w * ell),
// and div | ell.
struct QuotientRow {
    int row;
    int kind;  // 1 or 2
    int r;
    int a0, a1, a2;
    int mu_num, mu_den;
    int s_w, s_q;
    int div;
};

inline constexpr std::array<QuotientRow, 27> table_vi_vii = {{
    {1, 1, 3, 1, 0, 1, 1, 1, 1, 2, 3},
    {2, 1, 4, 1, 1, 1, 1, 1, 1, 2, 4},
    {3, 1, 4, 0, 1, 1, 2, 1, 1, 3, 4},
    {4, 1, 5, 1, 2, 1, 1, 1, 1, 2, 5},
    {5, 1, 6, 3, 1, 1, 1, 1, 1, 2, 6},
    {6, 1, 6, 2, 1, 1, 2, 1, 1, 3, 6},
    {7, 1, 6, 1, 1, 1, 3, 1, 1, 4, 6},
    {8, 1, 6, 1, 0, 1, 4, 1, 1, 5, 6},
    {9, 1, 8, 5, 1, 1, 1, 1, 1, 2, 8},
    {10, 1, 8, 3, 1, 1, 3, 1, 1, 4, 8},
    {11, 1, 8, 3, 1, 3, 1, 3, 3, 4, 8},
    {12, 1, 10, 7, 1, 1, 1, 1, 1, 2, 10},
    {13, 1, 10, 3, 1, 1, 5, 1, 1, 6, 10},
    {14, 1, 10, 3, 1, 3, 1, 1, 1, 2, 10},
    {15, 1, 12, 7, 1, 1, 3, 1, 1, 4, 12},
    {16, 1, 12, 4, 3, 1, 4, 1, 1, 5, 12},
    {17, 1, 12, 5, 1, 1, 5, 1, 1, 6, 12},
    {18, 1, 12, 3, 2, 1, 6, 1, 1, 7, 12},
    {19, 1, 12, 5, 1, 5, 1, 5, 5, 6, 12},
    {20, 1, 12, 3, 2, 5, 2, 5, 5, 7, 12},
    {21, 2, 3, 1, 0, 1, 1, 1, 1, 2, 3},
    {22, 2, 4, 1, 0, 1, 2, 1, 1, 3, 4},
    {23, 2, 4, 1, 1, 1, 1, 2, 2, 3, 2},
    {24, 2, 6, 1, 0, 1, 4, 1, 1, 5, 6},
    {25, 2, 6, 1, 1, 1, 3, 2, 2, 5, 3},
    {26, 2, 6, 1, 2, 1, 2, 3, 3, 5, 2},
    {27, 2, 6, 1, 3, 1, 1, 4, 4, 5, 3},
}};

// Values of mu * ell admitted by the quotient-row classification.
inline constexpr std::array<std::array<int, 2>, 14> c_star_values = {{
    {0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}, {2, 3},
    {1, 1}, {3, 2}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1},
}};

}  // namespace logdgen::tables
