#ifndef FIBERTORIC_LINALG_HPP
#define FIBERTORIC_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "number.hpp"

// Exact dense linear algebra over Z and Q. Matrices are row-major vectors of rows.

namespace fibertoric::linalg
{

inline std::size_t num_cols(const RatMatrix &m)
{
    return m.empty() ? 0 : m.front().size();
}

inline RatMatrix to_rational(const IntMatrix &m)
{
    RatMatrix r;
    r.reserve(m.size());
    for (const auto &row : m) {
        r.push_back(fibertoric::to_rational(row));
    }
    return r;
}

template <typename T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>> &m, std::size_t cols)
{
    std::vector<std::vector<T>> t(cols, std::vector<T>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            t[j][i] = m[i][j];
        }
    }
    return t;
}

struct Echelon {
    RatMatrix rows;                 // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each row
};

/// Reduced row echelon form; pivots are chosen left to right.
inline Echelon rref(RatMatrix m, std::size_t cols)
{
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) {
            m[r][j] *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) {
                continue;
            }
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

inline std::size_t rank(const RatMatrix &m, std::size_t cols)
{
    return rref(m, cols).pivots.size();
}

inline std::size_t rank(const IntMatrix &m, std::size_t cols)
{
    return rank(to_rational(m), cols);
}

/// Some solution of A x = b (free variables set to zero), or nullopt if inconsistent.
inline std::optional<RatVector> solve(const RatMatrix &a, const RatVector &b, std::size_t cols)
{
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(cols);
        aug[i].push_back(b[i]);
    }
    const Echelon e = rref(std::move(aug), cols + 1);
    RatVector x(cols, Rational(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == cols) {
            return std::nullopt;
        }
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return x;
}

/// Basis of the right kernel {x : A x = 0}.
inline RatMatrix nullspace(const RatMatrix &a, std::size_t cols)
{
    const Echelon e = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    RatMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        RatVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            v[e.pivots[i]] = -e.rows[i][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational determinant(RatMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    return det;
}

inline Integer determinant(const IntMatrix &m)
{
    return numerator(determinant(to_rational(m)));
}

/// Nonzero diagonal entries of the Smith normal form (elementary divisors), each positive.
inline std::vector<Integer> smith_invariants(IntMatrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    std::vector<Integer> out;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pick the nonzero entry of least absolute value in the trailing block
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] != 0 && (!best || abs(m[i][j]) < abs(m[best->first][best->second]))) {
                    best = {i, j};
                }
            }
        }
        if (!best) {
            break;
        }
        std::swap(m[t], m[best->first]);
        for (auto &row : m) {
            std::swap(row[t], row[best->second]);
        }
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            const Integer q = m[i][t] / m[t][t];
            if (q != 0) {
                for (std::size_t j = t; j < cols; ++j) {
                    m[i][j] -= q * m[t][j];
                }
            }
            clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            const Integer q = m[t][j] / m[t][t];
            if (q != 0) {
                for (std::size_t i = t; i < rows; ++i) {
                    m[i][j] -= q * m[i][t];
                }
            }
            clean = clean && m[t][j] == 0;
        }
        if (!clean) {
            continue;
        }
        // the pivot must divide the whole trailing block
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < rows && !bad_row; ++i) {
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[i][j] % m[t][t] != 0) {
                    bad_row = i;
                    break;
                }
            }
        }
        if (bad_row) {
            for (std::size_t j = t; j < cols; ++j) {
                m[t][j] += m[*bad_row][j];
            }
            continue;
        }
        out.push_back(abs(m[t][t]));
        ++t;
    }
    return out;
}

/// Exact phase-one simplex: some x >= 0 with A x = b, or nullopt. Bland's rule, so it terminates.
inline std::optional<RatVector> feasible_point(const RatMatrix &a, const RatVector &b,
                                               std::size_t cols)
{
    const std::size_t m = a.size();
    const std::size_t width = cols + m + 1; // structural, artificial, rhs
    RatMatrix tab(m, RatVector(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < cols; ++j) {
            tab[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        }
        tab[i][cols + i] = 1;
        tab[i][width - 1] = flip ? Rational(-b[i]) : b[i];
        basis[i] = cols + i;
    }
    // reduced costs of the phase-one objective (minimize the sum of artificials)
    RatVector cost(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            cost[j] -= tab[i][j];
        }
        cost[width - 1] -= tab[i][width - 1];
    }
    for (;;) {
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j < cols + m; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (!enter) {
            break;
        }
        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][*enter] <= 0) {
                continue;
            }
            const Rational ratio = tab[i][width - 1] / tab[i][*enter];
            if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (!leave) {
            break; // unbounded direction cannot occur for a phase-one objective bounded below by 0
        }
        const std::size_t r = *leave;
        const Rational inv = 1 / tab[r][*enter];
        for (auto &v : tab[r]) {
            v *= inv;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i != r && tab[i][*enter] != 0) {
                const Rational f = tab[i][*enter];
                for (std::size_t j = 0; j < width; ++j) {
                    tab[i][j] -= f * tab[r][j];
                }
            }
        }
        if (cost[*enter] != 0) {
            const Rational f = cost[*enter];
            for (std::size_t j = 0; j < width; ++j) {
                cost[j] -= f * tab[r][j];
            }
        }
        basis[r] = *enter;
    }
    if (cost[width - 1] != 0) {
        return std::nullopt;
    }
    RatVector x(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < cols) {
            x[basis[i]] = tab[i][width - 1];
        }
    }
    return x;
}

inline IntMatrix identity(std::size_t n)
{
    IntMatrix id(n, IntVector(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
        id[i][i] = 1;
    }
    return id;
}

inline IntVector apply(const IntMatrix &u, const IntVector &v)
{
    IntVector out(u.size(), Integer(0));
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = dot(u[i], v);
    }
    return out;
}

} // namespace fibertoric::linalg

#endif
