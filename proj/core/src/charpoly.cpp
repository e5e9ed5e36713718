#include "ballbound/charpoly.hpp"

#include <algorithm>

namespace ballbound {

IntPoly charpoly(const PolyMatrix& m, const std::string& t_var, const Deadline* deadline) {
    const std::size_t n = m.size;
    if (n == 0) throw std::invalid_argument("charpoly: empty matrix");
    for (const auto& e : m.entries)
        if (e.uses(t_var))
            throw std::invalid_argument("charpoly: " + t_var + " already occurs in the matrix");

    // c holds the characteristic polynomial coefficients of the leading r x r
    // principal submatrix, c[0] = 1 (coefficient of T^r).
    std::vector<IntPoly> c = {IntPoly::constant(1), -m.at(0, 0)};
    for (std::size_t r = 2; r <= n; ++r) {
        if (deadline && deadline->expired()) throw BudgetExceeded("charpoly");
        // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-2} S
        // with A the leading (r-1)x(r-1) block, R the row, S the column.
        std::vector<IntPoly> t(r + 1);
        t[0] = IntPoly::constant(1);
        t[1] = -m.at(r - 1, r - 1);
        std::vector<IntPoly> v(r - 1);
        for (std::size_t i = 0; i < r - 1; ++i) v[i] = m.at(i, r - 1);
        for (std::size_t p = 2; p <= r; ++p) {
            IntPoly dot;
            for (std::size_t i = 0; i < r - 1; ++i) {
                if (!m.at(r - 1, i).is_zero() && !v[i].is_zero()) dot += m.at(r - 1, i) * v[i];
            }
            t[p] = -dot;
            if (p == r) break;
            if (deadline && deadline->expired()) throw BudgetExceeded("charpoly");
            std::vector<IntPoly> nv(r - 1);
            for (std::size_t i = 0; i < r - 1; ++i) {
                for (std::size_t l = 0; l < r - 1; ++l) {
                    if (!m.at(i, l).is_zero() && !v[l].is_zero()) nv[i] += m.at(i, l) * v[l];
                }
            }
            v = std::move(nv);
        }
        // c_new = T * c (lower-triangular Toeplitz application)
        std::vector<IntPoly> nc(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
            for (std::size_t j = 0; j < c.size() && j <= i; ++j) {
                if (c[j].is_zero() || t[i - j].is_zero()) continue;
                nc[i] += t[i - j] * c[j];
            }
        }
        c = std::move(nc);
    }

    IntPoly chi;
    IntPoly tpoly = IntPoly::variable(t_var);
    for (std::size_t i = 0; i <= n; ++i) {
        if (c[i].is_zero()) continue;
        chi += c[i] * pow(tpoly, static_cast<unsigned>(n - i));
    }
    return chi;
}

IntPoly determinant(PolyMatrix m) {
    const std::size_t n = m.size;
    if (n == 0) return IntPoly::constant(1);
    int sign = 1;
    IntPoly prev_pivot = IntPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // pivot search in column k
        std::size_t p = k;
        while (p < n && m.at(p, k).is_zero()) ++p;
        if (p == n) return IntPoly();  // singular
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                auto q = num.exact_div(prev_pivot);
                if (!q) throw std::logic_error("determinant: inexact division in Bareiss step");
                m.at(i, j) = std::move(*q);
            }
            m.at(i, k) = IntPoly();
        }
        prev_pivot = m.at(k, k);
    }
    IntPoly det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace ballbound
