#ifndef FIBERTORIC_POLYNOMIAL_HPP
#define FIBERTORIC_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "number.hpp"

namespace fibertoric
{

/// Exponent vector.
using Monomial = std::vector<unsigned>;

/// Sparse polynomial with exact rational coefficients; zero coefficients are never stored.
using Polynomial = std::map<Monomial, Rational>;

inline unsigned total_degree(const Monomial &m)
{
    return std::accumulate(m.begin(), m.end(), 0U);
}

/// Graded-lexicographic comparison with x_1 > x_2 > ... .
inline bool grlex_greater(const Monomial &a, const Monomial &b)
{
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) {
        return da > db;
    }
    return a > b;
}

inline Monomial monomial_product(const Monomial &a, const Monomial &b)
{
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

inline Monomial variable(std::size_t num_vars, std::size_t i)
{
    Monomial m(num_vars, 0);
    m[i] = 1;
    return m;
}

inline void add_term(Polynomial &p, const Monomial &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            p.erase(it);
        }
    }
}

inline Polynomial constant_polynomial(std::size_t num_vars, const Rational &c)
{
    Polynomial p;
    add_term(p, Monomial(num_vars, 0), c);
    return p;
}

/// sum_i coeffs[i] x_i
inline Polynomial linear_polynomial(const RatVector &coeffs)
{
    Polynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        add_term(p, variable(coeffs.size(), i), coeffs[i]);
    }
    return p;
}

inline Polynomial operator+(Polynomial a, const Polynomial &b)
{
    for (const auto &[m, c] : b) {
        add_term(a, m, c);
    }
    return a;
}

inline Polynomial scale(Polynomial a, const Rational &s)
{
    if (s == 0) {
        return {};
    }
    for (auto &[m, c] : a) {
        c *= s;
    }
    return a;
}

inline Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    Polynomial out;
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            add_term(out, monomial_product(ma, mb), ca * cb);
        }
    }
    return out;
}

inline Polynomial power(const Polynomial &p, unsigned e, std::size_t num_vars)
{
    Polynomial out = constant_polynomial(num_vars, 1);
    for (unsigned i = 0; i < e; ++i) {
        out = out * p;
    }
    return out;
}

/// Homogeneous component of degree d.
inline Polynomial homogeneous_part(const Polynomial &p, unsigned d)
{
    Polynomial out;
    for (const auto &[m, c] : p) {
        if (total_degree(m) == d) {
            out.emplace(m, c);
        }
    }
    return out;
}

/// All monomials of total degree d in n variables, grlex descending.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d)
{
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) {
            out.emplace_back();
        }
        return out;
    }
    Monomial cur(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    rec(0, d);
    return out;
}

inline std::string monomial_string(const Monomial &m, const std::vector<std::string> &names)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += names.at(i);
        if (m[i] > 1) {
            s += "^" + std::to_string(m[i]);
        }
    }
    return s.empty() ? "1" : s;
}

} // namespace fibertoric

#endif
