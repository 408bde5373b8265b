#pragma once

// Fraction-free Gaussian elimination (Bareiss) over the integers.
// Intermediate entries stay integral and divisions are exact, which keeps
// determinants and linear solves affordable when the inputs have thousands
// of digits.

#include <optional>
#include <vector>

#include "pisot/exact.hpp"

namespace pisot {

using IntMatrix = std::vector<std::vector<Int>>;

// Exact determinant of a square integer matrix.
inline Int bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// Exact solve of A x = b over the rationals via fraction-free elimination.
// Returns nullopt when A is singular.
inline std::optional<std::vector<Rat>> bareiss_solve(IntMatrix a, std::vector<Int> b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);

    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return std::nullopt;
            std::swap(a[k], a[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if (a[n - 1][n - 1] == 0) return std::nullopt;

    // Back substitution over Q.
    std::vector<Rat> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rat sum(a[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) sum -= Rat(a[ii][j]) * x[j];
        x[ii] = sum / Rat(a[ii][ii]);
        x[ii].canonicalize();
    }
    return x;
}

}  // namespace pisot
