#ifndef FIBERTORIC_COHOMOLOGY_HPP
#define FIBERTORIC_COHOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fan.hpp"
#include "number.hpp"
#include "polynomial.hpp"
#include "quotient.hpp"
#include "twist.hpp"

// Cohomology of smooth complete toric varieties through the Stanley-Reisner presentation
// Q[x_rays] / (SR ideal + linear relations), one variable per ray in the fan's ray order.

namespace fibertoric
{

/// Rational coefficient per ray of some fan.
struct Divisor {
    RatVector coefficients;

    friend bool operator==(const Divisor &, const Divisor &) = default;
};

/// Minimal non-faces: inclusion-minimal ray sets that span no cone.
inline std::vector<Cone> sr_ideal(const Fan &fan)
{
    const auto fe = enumerate_faces(fan);
    std::set<Cone> faces;
    for (const auto &[dim, c] : fe.faces) {
        faces.insert(c);
    }
    std::set<Cone> minimal;
    for (const auto &f : faces) {
        for (std::size_t v = 0; v < fan.rays.size(); ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) {
                continue;
            }
            Cone s = f;
            s.insert(std::upper_bound(s.begin(), s.end(), v), v);
            if (faces.count(s)) {
                continue;
            }
            bool all_facets_faces = true;
            for (std::size_t drop = 0; drop < s.size() && all_facets_faces; ++drop) {
                Cone t;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != drop) {
                        t.push_back(s[i]);
                    }
                }
                all_facets_faces = faces.count(t) > 0;
            }
            if (all_facets_faces) {
                minimal.insert(std::move(s));
            }
        }
    }
    std::vector<Cone> out(minimal.begin(), minimal.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Cone &a, const Cone &b) { return a.size() < b.size(); });
    return out;
}

/// One form sum_rays <ray, u_k> x_ray per standard basis character u_k of M.
inline std::vector<IntVector> linear_ideal(const Fan &fan)
{
    std::vector<IntVector> forms;
    for (std::size_t k = 0; k < fan.rank; ++k) {
        IntVector f;
        for (const auto &r : fan.rays) {
            f.push_back(r[k]);
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

inline RingPresentation stanley_reisner_presentation(const Fan &fan)
{
    return RingPresentation{fan.rays.size(), sr_ideal(fan), linear_ideal(fan), {}};
}

namespace detail
{

inline void require_smooth_complete(const Fan &fan, const char *what)
{
    const auto rep = fan_validate(fan);
    if (!rep.is_valid || !rep.is_smooth || !rep.is_complete) {
        throw kernel_error(std::string(what) + ": fan must be valid, smooth and complete");
    }
}

} // namespace detail

/// H^*(X_fan, Q) for a smooth complete fan, with the point class of the lexicographically first
/// maximal cone as degree normalization.
class CohomologyRing
{
public:
    explicit CohomologyRing(const Fan &fan) : fan_(fan)
    {
        detail::require_smooth_complete(fan, "cohomology ring");
        ring_ = GradedRing::create(stanley_reisner_presentation(fan), static_cast<unsigned>(fan.rank));
        point_ = cone_class(*std::min_element(fan.maximal_cones.begin(), fan.maximal_cones.end()));
    }

    const Fan &fan() const
    {
        return fan_;
    }

    const RingPtr &ring() const
    {
        return ring_;
    }

    unsigned rank() const
    {
        return static_cast<unsigned>(fan_.rank);
    }

    RingClass unit() const
    {
        return unit_class(ring_);
    }

    RingClass ray_class(std::size_t i) const
    {
        return make_class(ring_, Polynomial{{variable(fan_.rays.size(), i), Rational(1)}}, 1);
    }

    RingClass divisor_class(const Divisor &d) const
    {
        if (d.coefficients.size() != fan_.rays.size()) {
            throw kernel_error("divisor has " + std::to_string(d.coefficients.size())
                               + " coefficients, fan has " + std::to_string(fan_.rays.size())
                               + " rays");
        }
        return make_class(ring_, linear_polynomial(d.coefficients), 1);
    }

    /// Class of the squarefree monomial of a cone.
    RingClass cone_class(const Cone &c) const
    {
        Monomial m(fan_.rays.size(), 0);
        for (auto i : c) {
            m[i] = 1;
        }
        return make_class(ring_, Polynomial{{m, Rational(1)}}, static_cast<unsigned>(c.size()));
    }

    RingClass monomial_class(const Monomial &m) const
    {
        return make_class(ring_, Polynomial{{m, Rational(1)}}, total_degree(m));
    }

    const RingClass &point_class() const
    {
        return point_;
    }

    /// Coefficient of a top-degree class relative to the point class.
    Rational degree(const RingClass &c) const
    {
        if (c.degree != rank()) {
            throw kernel_error("degree_of_top_class: class has degree " + std::to_string(c.degree)
                               + ", top degree is " + std::to_string(rank()));
        }
        for (std::size_t k = 0; k < point_.coefficients.size(); ++k) {
            if (point_.coefficients[k] != 0) {
                return c.coefficients[k] / point_.coefficients[k];
            }
        }
        throw kernel_error("degree_of_top_class: point class vanishes");
    }

    std::vector<std::size_t> betti_numbers() const
    {
        std::vector<std::size_t> b;
        for (unsigned d = 0; d <= rank(); ++d) {
            b.push_back(ring_->basis(d).dimension());
        }
        return b;
    }

private:
    Fan fan_;
    RingPtr ring_;
    RingClass point_;
};

inline Rational degree_of_top_class(const CohomologyRing &h, const RingClass &c)
{
    return h.degree(c);
}

inline Rational intersection_number(const CohomologyRing &h, const std::vector<Divisor> &divisors)
{
    if (divisors.size() != h.rank()) {
        throw kernel_error("intersection_number: need exactly " + std::to_string(h.rank())
                           + " divisors, got " + std::to_string(divisors.size()));
    }
    RingClass acc = h.unit();
    for (const auto &d : divisors) {
        acc = multiply(acc, h.divisor_class(d));
    }
    return h.degree(acc);
}

inline Rational intersection_number(const Fan &fan, const std::vector<Divisor> &divisors)
{
    return intersection_number(CohomologyRing(fan), divisors);
}

/// D^rank
inline Rational self_intersection(const CohomologyRing &h, const Divisor &d)
{
    return intersection_number(h, std::vector<Divisor>(h.rank(), d));
}

inline std::vector<std::size_t> betti_numbers(const Fan &fan)
{
    return CohomologyRing(fan).betti_numbers();
}

/// Coefficients h_0..h_rank of sum_i f_{i-1} (t-1)^{rank-i}, h_i at t^{rank-i}.
inline std::vector<Integer> h_vector(const Fan &fan)
{
    const auto f = enumerate_faces(fan).f_vector; // f[i] = #i-dim cones = f_{i-1}
    const std::size_t n = fan.rank;
    std::vector<Integer> poly(n + 1, Integer(0)); // coefficient of t^p
    for (std::size_t i = 0; i <= n; ++i) {
        const Integer fi = i < f.size() ? Integer(f[i]) : Integer(0);
        const std::size_t e = n - i;
        for (std::size_t p = 0; p <= e; ++p) {
            Integer term = fi * binomial(static_cast<unsigned>(e), static_cast<unsigned>(p));
            if ((e - p) % 2 == 1) {
                term = -term;
            }
            poly[p] += term;
        }
    }
    std::vector<Integer> h(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        h[i] = poly[n - i];
    }
    return h;
}

/// Graded components c_0..c_rank of prod_rays (1 + x_ray).
inline std::vector<RingClass> total_chern(const CohomologyRing &h)
{
    std::vector<RingClass> c;
    c.push_back(h.unit());
    for (unsigned d = 1; d <= h.rank(); ++d) {
        c.push_back(make_class(h.ring(), {}, d));
    }
    for (std::size_t i = 0; i < h.fan().rays.size(); ++i) {
        const RingClass x = h.ray_class(i);
        for (unsigned d = h.rank(); d >= 1; --d) {
            c[d] = add(c[d], multiply(c[d - 1], x));
        }
    }
    return c;
}

inline std::vector<RingClass> total_chern(const Fan &fan)
{
    return total_chern(CohomologyRing(fan));
}

inline Integer euler_characteristic(const CohomologyRing &h)
{
    const Rational deg = h.degree(total_chern(h).back());
    return numerator(deg);
}

inline Integer euler_characteristic(const Fan &fan)
{
    return euler_characteristic(CohomologyRing(fan));
}

/// prod_rays (1 + x_ray) with every monomial divisible by an SR monomial dropped.
inline Polynomial chern_modulo_sr(const Fan &fan)
{
    const auto pres = stanley_reisner_presentation(fan);
    const std::size_t r = fan.rays.size();
    Polynomial p = constant_polynomial(r, 1);
    for (std::size_t i = 0; i < r; ++i) {
        Polynomial factor = constant_polynomial(r, 1);
        add_term(factor, variable(r, i), 1);
        p = p * factor;
        for (auto it = p.begin(); it != p.end();) {
            it = is_dead(pres, it->first) ? p.erase(it) : std::next(it);
        }
    }
    return p;
}

/// Presentation in x (fiber rays) then y (base rays): I_B + I_F + J_B + J~_F, with
/// J~_F generated by sum_i <e_i, lambda> x_i - c_top(lambda), c_top(lambda) the class of
/// character_divisor(t, lambda).
inline RingPresentation fibered_presentation(const TwistData &t)
{
    check_twist(t);
    const std::size_t r = t.fiber.rays.size();
    const std::size_t s = t.base.rays.size();
    RingPresentation pres;
    pres.num_vars = r + s;
    for (const auto &m : sr_ideal(t.fiber)) {
        pres.sr_monomials.push_back(m);
    }
    for (const auto &m : sr_ideal(t.base)) {
        Cone shifted;
        for (auto j : m) {
            shifted.push_back(j + r);
        }
        pres.sr_monomials.push_back(std::move(shifted));
    }
    for (const auto &form : linear_ideal(t.base)) {
        IntVector f(r, Integer(0));
        f.insert(f.end(), form.begin(), form.end());
        pres.linear_forms.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < t.fiber.rank; ++k) {
        LatticeVector lambda(t.fiber.rank, Integer(0));
        lambda[k] = 1;
        const RatVector ctop = character_divisor(t, lambda);
        IntVector f;
        for (const auto &e : t.fiber.rays) {
            f.push_back(dot(e, lambda));
        }
        for (const auto &c : ctop) {
            f.push_back(-numerator(c)); // integral since lambda is integral
        }
        pres.linear_forms.push_back(std::move(f));
    }
    return pres;
}

/// Degreewise comparison of relation spaces: for each d <= rank, the SR-dead monomials and the
/// reduced relation rows over the surviving monomials coincide.
inline bool same_relations(const RingPresentation &a, const RingPresentation &b, unsigned max_degree)
{
    if (a.num_vars != b.num_vars) {
        return false;
    }
    for (unsigned d = 0; d <= max_degree; ++d) {
        const auto ga = graded_basis(a, d);
        const auto gb = graded_basis(b, d);
        if (ga.live != gb.live || ga.relations != gb.relations) {
            return false;
        }
    }
    return true;
}

inline bool check_fibered_presentation(const TwistData &t)
{
    const Fan total = twisted_product(t);
    return same_relations(fibered_presentation(t), stanley_reisner_presentation(total),
                          static_cast<unsigned>(total.rank));
}

} // namespace fibertoric

#endif
