#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <vector>

namespace logdgen {

using IntMatrix = std::vector<std::vector<long>>;
using RatMatrix = std::vector<std::vector<Rational>>;

namespace detail {

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long v : m[i]) r[i].push_back(Rational(v));
    return r;
}

// Row echelon form in place; returns rank and accumulates the determinant
// for square inputs.
inline std::size_t eliminate(RatMatrix& a, Rational* det = nullptr) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, rank = 0;
    Rational d = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) {
            d = 0;
            continue;
        }
        if (piv != rank) {
            std::swap(a[piv], a[rank]);
            d = -d;
        }
        d *= a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    if (det) *det = rank == rows ? d : Rational(0);
    return rank;
}

}  // namespace detail

inline Rational determinant(const IntMatrix& m) {
    if (m.empty()) return 1;
    RatMatrix a = detail::to_rational(m);
    Rational d;
    detail::eliminate(a, &d);
    return d;
}

inline std::size_t matrix_rank(const IntMatrix& m) {
    RatMatrix a = detail::to_rational(m);
    return detail::eliminate(a);
}

inline bool is_symmetric(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) return false;
    }
    return true;
}

// Sylvester's criterion on -m with exact minors.
inline bool is_negative_definite(const IntMatrix& m) {
    if (!is_symmetric(m)) throw std::invalid_argument("is_negative_definite: matrix not symmetric");
    for (std::size_t k = 1; k <= m.size(); ++k) {
        IntMatrix lead(k, std::vector<long>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = -m[i][j];
        if (determinant(lead) <= 0) return false;
    }
    return true;
}

// Solves m x = b; throws std::domain_error when m is singular.
inline std::vector<Rational> solve(const IntMatrix& m, const std::vector<Rational>& b) {
    std::size_t n = m.size();
    RatMatrix a = detail::to_rational(m);
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular system");
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace logdgen
