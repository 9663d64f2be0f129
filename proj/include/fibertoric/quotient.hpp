#ifndef FIBERTORIC_QUOTIENT_HPP
#define FIBERTORIC_QUOTIENT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fan.hpp"
#include "number.hpp"
#include "polynomial.hpp"

// Degreewise normal forms for graded quotients k[x_1..x_r] / (squarefree monomials + homogeneous
// polynomials), computed by exact row reduction of Macaulay matrices.

namespace fibertoric
{

/// Graded quotient presentation. Squarefree monomials are stored as variable index sets.
struct RingPresentation {
    std::size_t num_vars = 0;
    std::vector<Cone> sr_monomials;
    std::vector<IntVector> linear_forms;  // coefficient per variable
    std::vector<Polynomial> extra_relations; // further homogeneous generators, if any
};

namespace detail
{

using SparseRow = std::vector<std::pair<std::size_t, Rational>>; // sorted by column

inline void axpy(SparseRow &row, const Rational &f, const SparseRow &other)
{
    // row -= f * other
    SparseRow out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < other.size()) {
        if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.push_back(std::move(row[i++]));
        } else if (i == row.size() || other[j].first < row[i].first) {
            out.emplace_back(other[j].first, -f * other[j].second);
            ++j;
        } else {
            Rational v = row[i].second - f * other[j].second;
            if (v != 0) {
                out.emplace_back(row[i].first, std::move(v));
            }
            ++i;
            ++j;
        }
    }
    row = std::move(out);
}

/// Sparse incremental echelon form; pivots are leading (smallest) columns.
class SparseEchelon
{
public:
    void insert(SparseRow row)
    {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                const Rational inv = 1 / row.front().second;
                for (auto &e : row) {
                    e.second *= inv;
                }
                pivots_.emplace(row.front().first, std::move(row));
                return;
            }
            const Rational f = row.front().second;
            axpy(row, f, it->second);
        }
    }

    /// Back-substitutes to reduced row echelon form and returns rows keyed by pivot column.
    std::map<std::size_t, SparseRow> reduced() const
    {
        std::map<std::size_t, SparseRow> done;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            SparseRow row = it->second;
            for (;;) {
                bool changed = false;
                for (std::size_t k = 1; k < row.size(); ++k) {
                    auto p = done.find(row[k].first);
                    if (p != done.end()) {
                        const Rational f = row[k].second;
                        axpy(row, f, p->second);
                        changed = true;
                        break;
                    }
                }
                if (!changed) {
                    break;
                }
            }
            done.emplace(it->first, std::move(row));
        }
        return done;
    }

private:
    std::map<std::size_t, SparseRow> pivots_;
};

inline bool divisible_by_squarefree(const Monomial &m, const Cone &vars)
{
    return std::all_of(vars.begin(), vars.end(), [&](std::size_t v) { return m[v] > 0; });
}

} // namespace detail

/// Degree-d slice of the quotient: surviving monomials (not divisible by an SR monomial), the
/// reduced relation matrix over them, and the normal form of each surviving monomial.
struct GradedBasis {
    unsigned degree = 0;
    std::vector<Monomial> live;             // grlex descending; column order of `relations`
    std::vector<Monomial> basis_monomials;  // non-pivot live monomials, grlex descending
    std::map<std::size_t, detail::SparseRow> relations; // RREF rows keyed by pivot column
    std::map<Monomial, RatVector> reduction; // live monomial -> coordinates in basis_monomials

    std::size_t dimension() const
    {
        return basis_monomials.size();
    }
};

inline bool is_dead(const RingPresentation &pres, const Monomial &m)
{
    return std::any_of(pres.sr_monomials.begin(), pres.sr_monomials.end(),
                       [&](const Cone &s) { return detail::divisible_by_squarefree(m, s); });
}

inline std::vector<Polynomial> relation_generators(const RingPresentation &pres)
{
    std::vector<Polynomial> gens;
    for (const auto &lf : pres.linear_forms) {
        Polynomial p;
        for (std::size_t i = 0; i < pres.num_vars; ++i) {
            add_term(p, variable(pres.num_vars, i), Rational(lf[i]));
        }
        if (!p.empty()) {
            gens.push_back(std::move(p));
        }
    }
    for (const auto &g : pres.extra_relations) {
        if (!g.empty()) {
            gens.push_back(g);
        }
    }
    return gens;
}

inline GradedBasis graded_basis(const RingPresentation &pres, unsigned d)
{
    GradedBasis gb;
    gb.degree = d;
    for (auto &m : monomials_of_degree(pres.num_vars, d)) {
        if (!is_dead(pres, m)) {
            gb.live.push_back(std::move(m));
        }
    }
    std::map<Monomial, std::size_t> column;
    for (std::size_t c = 0; c < gb.live.size(); ++c) {
        column.emplace(gb.live[c], c);
    }
    detail::SparseEchelon ech;
    for (const auto &g : relation_generators(pres)) {
        const unsigned e = total_degree(g.begin()->first);
        if (e > d) {
            continue;
        }
        for (const auto &m : monomials_of_degree(pres.num_vars, d - e)) {
            if (is_dead(pres, m)) {
                continue;
            }
            std::map<std::size_t, Rational> acc;
            for (const auto &[gm, gc] : g) {
                auto it = column.find(monomial_product(m, gm));
                if (it != column.end()) {
                    acc[it->second] += gc;
                }
            }
            detail::SparseRow row;
            for (auto &[c, v] : acc) {
                if (v != 0) {
                    row.emplace_back(c, std::move(v));
                }
            }
            ech.insert(std::move(row));
        }
    }
    gb.relations = ech.reduced();
    std::vector<std::size_t> basis_col_index(gb.live.size(), 0);
    for (std::size_t c = 0; c < gb.live.size(); ++c) {
        if (!gb.relations.count(c)) {
            basis_col_index[c] = gb.basis_monomials.size();
            gb.basis_monomials.push_back(gb.live[c]);
        }
    }
    const std::size_t dim = gb.basis_monomials.size();
    for (std::size_t c = 0; c < gb.live.size(); ++c) {
        RatVector v(dim, Rational(0));
        auto it = gb.relations.find(c);
        if (it == gb.relations.end()) {
            v[basis_col_index[c]] = 1;
        } else {
            // pivot + sum a_k m_k = 0 over non-pivot columns
            for (std::size_t k = 1; k < it->second.size(); ++k) {
                v[basis_col_index[it->second[k].first]] = -it->second[k].second;
            }
        }
        gb.reduction.emplace(gb.live[c], std::move(v));
    }
    return gb;
}

/// Immutable graded quotient ring with bases for degrees 0..max_degree. Degrees above max_degree
/// are treated as zero, which is exact when the ring vanishes there (complete smooth fans).
class GradedRing
{
public:
    static std::shared_ptr<const GradedRing> create(RingPresentation pres, unsigned max_degree)
    {
        return std::shared_ptr<const GradedRing>(new GradedRing(std::move(pres), max_degree));
    }

    const RingPresentation &presentation() const
    {
        return pres_;
    }

    unsigned max_degree() const
    {
        return static_cast<unsigned>(bases_.size()) - 1;
    }

    const GradedBasis &basis(unsigned d) const
    {
        if (d >= bases_.size()) {
            throw kernel_error("graded ring: degree " + std::to_string(d) + " exceeds computed range");
        }
        return bases_[d];
    }

    /// Coordinates of a homogeneous polynomial of degree d in the degree-d basis.
    RatVector reduce(const Polynomial &p, unsigned d) const
    {
        if (d > max_degree()) {
            return {};
        }
        const auto &gb = bases_[d];
        RatVector out(gb.dimension(), Rational(0));
        for (const auto &[m, c] : p) {
            if (total_degree(m) != d) {
                throw kernel_error("graded ring: polynomial is not homogeneous of degree "
                                   + std::to_string(d));
            }
            auto it = gb.reduction.find(m);
            if (it == gb.reduction.end()) {
                continue; // dead monomial
            }
            for (std::size_t k = 0; k < out.size(); ++k) {
                out[k] += c * it->second[k];
            }
        }
        return out;
    }

private:
    GradedRing(RingPresentation pres, unsigned max_degree) : pres_(std::move(pres))
    {
        for (unsigned d = 0; d <= max_degree; ++d) {
            bases_.push_back(graded_basis(pres_, d));
        }
    }

    RingPresentation pres_;
    std::vector<GradedBasis> bases_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Homogeneous element of a graded ring, in coordinates of that degree's basis.
struct RingClass {
    RingPtr ring;
    unsigned degree = 0;
    RatVector coefficients;

    bool is_zero() const
    {
        return std::all_of(coefficients.begin(), coefficients.end(),
                           [](const Rational &c) { return c == 0; });
    }

    Polynomial representative() const
    {
        Polynomial p;
        if (degree > ring->max_degree()) {
            return p;
        }
        const auto &gb = ring->basis(degree);
        for (std::size_t k = 0; k < coefficients.size(); ++k) {
            add_term(p, gb.basis_monomials[k], coefficients[k]);
        }
        return p;
    }

    friend bool operator==(const RingClass &a, const RingClass &b)
    {
        return a.ring == b.ring && a.degree == b.degree && a.coefficients == b.coefficients;
    }
};

inline RingClass make_class(const RingPtr &ring, const Polynomial &p, unsigned degree)
{
    return RingClass{ring, degree, ring->reduce(p, degree)};
}

inline RingClass unit_class(const RingPtr &ring)
{
    return make_class(ring, constant_polynomial(ring->presentation().num_vars, 1), 0);
}

inline RingClass multiply(const RingClass &a, const RingClass &b)
{
    if (a.ring != b.ring) {
        throw kernel_error("multiply: classes belong to different rings");
    }
    const unsigned d = a.degree + b.degree;
    return make_class(a.ring, a.representative() * b.representative(), d);
}

inline RingClass add(const RingClass &a, const RingClass &b)
{
    if (a.ring != b.ring || a.degree != b.degree) {
        throw kernel_error("add: classes must share ring and degree");
    }
    RingClass out = a;
    for (std::size_t k = 0; k < out.coefficients.size(); ++k) {
        out.coefficients[k] += b.coefficients[k];
    }
    return out;
}

} // namespace fibertoric

#endif
