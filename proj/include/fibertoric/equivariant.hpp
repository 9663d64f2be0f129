#ifndef FIBERTORIC_EQUIVARIANT_HPP
#define FIBERTORIC_EQUIVARIANT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "fan.hpp"
#include "number.hpp"
#include "polynomial.hpp"
#include "quotient.hpp"
#include "twist.hpp"

// Equivariant cohomology of smooth complete toric varieties: the Stanley-Reisner ring as the stable
// answer, and the finite approximations H^*(ET_m x_T X) = Q[x] / (I + K_m).

namespace fibertoric
{

/// Dimension of each graded piece, indexed by degree.
using HilbertCoefficients = std::vector<std::size_t>;

/// Coefficients of sum_i f_{i-1} t^i / (1-t)^i up to degree d_max.
inline HilbertCoefficients sr_hilbert_coeffs(const Fan &fan, std::size_t d_max)
{
    const auto f = enumerate_faces(fan).f_vector;
    HilbertCoefficients h(d_max + 1, 0);
    h[0] = 1;
    for (std::size_t d = 1; d <= d_max; ++d) {
        // t^i / (1-t)^i contributes binom(d-1, i-1) in degree d >= i
        Integer c = 0;
        for (std::size_t i = 1; i < f.size() && i <= d; ++i) {
            c += Integer(f[i]) * binomial(static_cast<unsigned>(d - 1), static_cast<unsigned>(i - 1));
        }
        h[d] = c.convert_to<std::size_t>();
    }
    return h;
}

/// Presentation of Q[x] / (I + K_m), K_m generated by the (m+1)-st powers of the character forms
/// of the standard basis of M.
inline RingPresentation truncated_presentation(const Fan &fan, std::size_t m)
{
    RingPresentation pres;
    pres.num_vars = fan.rays.size();
    pres.sr_monomials = sr_ideal(fan);
    for (const auto &form : linear_ideal(fan)) {
        RatVector coeffs(form.begin(), form.end());
        pres.extra_relations.push_back(
            power(linear_polynomial(coeffs), static_cast<unsigned>(m + 1), pres.num_vars));
    }
    return pres;
}

inline HilbertCoefficients truncated_quotient_dims(const Fan &fan, std::size_t m, std::size_t d_max)
{
    detail::require_smooth_complete(fan, "truncated_quotient_dims");
    const auto pres = truncated_presentation(fan, m);
    HilbertCoefficients dims;
    for (std::size_t d = 0; d <= d_max; ++d) {
        dims.push_back(graded_basis(pres, static_cast<unsigned>(d)).dimension());
    }
    return dims;
}

struct EquivariantReport {
    std::size_t m = 0;
    HilbertCoefficients truncated_dims; // degrees 0..rank of the Borel fan + 1
    HilbertCoefficients sr_coeffs;
    HilbertCoefficients borel_betti;
    bool low_degrees_match_sr = false;  // degrees <= m
    bool matches_borel = false;         // every degree
    bool monotone_in_m = false;         // dims non-decreasing in m, equal to SR once m >= degree
    bool consistent = false;
    std::vector<std::string> mismatches;
};

inline EquivariantReport equivariant_consistency_check(const Fan &fan, std::size_t m)
{
    EquivariantReport rep;
    rep.m = m;
    const Fan borel = twisted_product(borel_fan(fan, static_cast<long>(m)));
    const std::size_t top = borel.rank;
    const std::size_t d_max = top + 1;
    rep.truncated_dims = truncated_quotient_dims(fan, m, d_max);
    rep.sr_coeffs = sr_hilbert_coeffs(fan, d_max);
    rep.borel_betti = betti_numbers(borel);
    rep.borel_betti.push_back(0); // above the top degree

    rep.low_degrees_match_sr = true;
    for (std::size_t d = 0; d <= m && d <= d_max; ++d) {
        if (rep.truncated_dims[d] != rep.sr_coeffs[d]) {
            rep.low_degrees_match_sr = false;
            rep.mismatches.push_back("degree " + std::to_string(d) + ": truncated quotient "
                                     + std::to_string(rep.truncated_dims[d]) + " vs SR "
                                     + std::to_string(rep.sr_coeffs[d]));
        }
    }
    rep.matches_borel = rep.truncated_dims == rep.borel_betti;
    if (!rep.matches_borel) {
        rep.mismatches.push_back("truncated quotient dimensions differ from Borel fan Betti numbers");
    }
    rep.monotone_in_m = true;
    HilbertCoefficients prev;
    for (std::size_t mm = 0; mm <= m; ++mm) {
        const auto cur = mm == m ? rep.truncated_dims : truncated_quotient_dims(fan, mm, d_max);
        for (std::size_t d = 0; d <= d_max; ++d) {
            if (!prev.empty() && cur[d] < prev[d]) {
                rep.monotone_in_m = false;
                rep.mismatches.push_back("degree " + std::to_string(d) + " decreases from m="
                                         + std::to_string(mm - 1) + " to m=" + std::to_string(mm));
            }
            if (mm >= d && cur[d] != rep.sr_coeffs[d]) {
                rep.monotone_in_m = false;
                rep.mismatches.push_back("degree " + std::to_string(d) + " at m=" + std::to_string(mm)
                                         + " has not stabilized to the SR coefficient");
            }
        }
        prev = cur;
    }
    rep.consistent = rep.low_degrees_match_sr && rep.matches_borel && rep.monotone_in_m;
    return rep;
}

} // namespace fibertoric

#endif
