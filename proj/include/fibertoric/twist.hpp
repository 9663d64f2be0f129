#ifndef FIBERTORIC_TWIST_HPP
#define FIBERTORIC_TWIST_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fan.hpp"
#include "linalg.hpp"
#include "number.hpp"

// Twisted products of fans. Coordinates of N = N_B x N_F are ordered (base, fiber) throughout.

namespace fibertoric
{

/// Cone-wise linear map from the support of a simplicial base fan to the fiber lattice,
/// recorded by its values on the base rays.
struct PLMap {
    Fan base_fan;
    std::size_t fiber_rank = 0;
    std::vector<LatticeVector> values_on_rays;

    friend bool operator==(const PLMap &, const PLMap &) = default;
};

struct TwistData {
    Fan base;
    Fan fiber;
    PLMap phi;

    friend bool operator==(const TwistData &, const TwistData &) = default;
};

struct SplitResult {
    std::optional<TwistData> data;
    std::string reason; // set when data is empty

    explicit operator bool() const
    {
        return data.has_value();
    }
};

/// Sign s in D_lambda = s * sum_j <Phi(f_j), lambda> D_j. With s = -1 the class of D_lambda is
/// c_top(lambda) = sum_i <e_i, lambda> x_i in the twisted fan's ring, and nef fiber divisors lift to
/// the twisted fan's divisor polytopes.
inline constexpr int character_sign = -1;

inline void check_twist(const TwistData &t)
{
    if (!(t.phi.base_fan == t.base)) {
        throw kernel_error("twist data: phi is defined on a different base fan");
    }
    if (t.phi.fiber_rank != t.fiber.rank) {
        throw kernel_error("twist data: phi fiber rank does not match the fiber fan");
    }
    if (t.phi.values_on_rays.size() != t.base.rays.size()) {
        throw kernel_error("twist data: phi needs one value per base ray");
    }
    for (const auto &v : t.phi.values_on_rays) {
        if (v.size() != t.fiber.rank) {
            throw kernel_error("twist data: phi value has wrong rank");
        }
    }
}

inline TwistData make_twist(Fan base, Fan fiber, std::vector<LatticeVector> phi_values)
{
    TwistData t;
    t.phi = PLMap{base, fiber.rank, std::move(phi_values)};
    t.base = std::move(base);
    t.fiber = std::move(fiber);
    check_twist(t);
    return t;
}

inline RationalVector pl_evaluate(const PLMap &phi, const RationalVector &x)
{
    for (const auto &mc : phi.base_fan.maximal_cones) {
        const auto c = cone_coordinates(phi.base_fan, mc, x);
        if (!c || std::any_of(c->begin(), c->end(), [](const Rational &v) { return v < 0; })) {
            continue;
        }
        RationalVector out(phi.fiber_rank, Rational(0));
        for (std::size_t j = 0; j < mc.size(); ++j) {
            for (std::size_t i = 0; i < phi.fiber_rank; ++i) {
                out[i] += (*c)[j] * Rational(phi.values_on_rays[mc[j]][i]);
            }
        }
        return out;
    }
    throw kernel_error("pl_evaluate: point " + detail::vec_str(x)
                       + " lies outside the support of the base fan");
}

/// Rays: fiber rays (0, e_i) first, then lifted base rays (f_j, Phi(f_j)). Maximal cones are
/// lifted base cone + fiber cone, base cones outermost.
inline Fan twisted_product(const TwistData &t)
{
    check_twist(t);
    const std::size_t k = t.base.rank;
    const std::size_t n = t.fiber.rank;
    Fan out;
    out.rank = k + n;
    for (const auto &e : t.fiber.rays) {
        LatticeVector v(k, Integer(0));
        v.insert(v.end(), e.begin(), e.end());
        out.rays.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < t.base.rays.size(); ++j) {
        LatticeVector v = t.base.rays[j];
        v.insert(v.end(), t.phi.values_on_rays[j].begin(), t.phi.values_on_rays[j].end());
        out.rays.push_back(std::move(v));
    }
    const std::size_t shift = t.fiber.rays.size();
    for (const auto &sigma : t.base.maximal_cones) {
        for (const auto &tau : t.fiber.maximal_cones) {
            Cone c = tau;
            for (auto j : sigma) {
                c.push_back(j + shift);
            }
            std::sort(c.begin(), c.end());
            out.maximal_cones.push_back(std::move(c));
        }
    }
    return out;
}

namespace detail
{

inline std::vector<Cone> inclusion_maximal(std::vector<Cone> cones)
{
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    std::vector<Cone> out;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cones.size() && !dominated; ++j) {
            dominated = i != j && cones[i].size() < cones[j].size() && is_subset(cones[i], cones[j]);
        }
        if (!dominated) {
            out.push_back(cones[i]);
        }
    }
    return out;
}

} // namespace detail

/// Recovers (base, Phi, fiber) with respect to the coordinate sublattice `base_coordinates`.
inline SplitResult detect_fibered(const Fan &fan, const std::vector<std::size_t> &base_coordinates)
{
    SplitResult res;
    std::vector<bool> is_base(fan.rank, false);
    for (auto c : base_coordinates) {
        if (c >= fan.rank || is_base[c]) {
            res.reason = "base coordinates must be distinct indices below the lattice rank";
            return res;
        }
        is_base[c] = true;
    }
    std::vector<std::size_t> base_idx;
    std::vector<std::size_t> fiber_idx;
    for (std::size_t i = 0; i < fan.rank; ++i) {
        (is_base[i] ? base_idx : fiber_idx).push_back(i);
    }
    auto project = [](const LatticeVector &v, const std::vector<std::size_t> &idx) {
        LatticeVector out;
        for (auto i : idx) {
            out.push_back(v[i]);
        }
        return out;
    };

    std::vector<std::size_t> fiber_rays;
    std::vector<std::size_t> lifted_rays;
    std::vector<std::size_t> new_index(fan.rays.size());
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
        const auto b = project(fan.rays[r], base_idx);
        const bool zero = std::all_of(b.begin(), b.end(), [](const Integer &x) { return x == 0; });
        if (zero) {
            new_index[r] = fiber_rays.size();
            fiber_rays.push_back(r);
        } else {
            new_index[r] = lifted_rays.size();
            lifted_rays.push_back(r);
        }
    }

    Fan fiber;
    fiber.rank = fiber_idx.size();
    for (auto r : fiber_rays) {
        fiber.rays.push_back(project(fan.rays[r], fiber_idx));
    }
    Fan base;
    base.rank = base_idx.size();
    std::vector<LatticeVector> phi;
    for (auto r : lifted_rays) {
        auto f = project(fan.rays[r], base_idx);
        if (!is_primitive(f)) {
            res.reason = "projection of ray " + std::to_string(r) + " is not primitive";
            return res;
        }
        if (std::find(base.rays.begin(), base.rays.end(), f) != base.rays.end()) {
            res.reason = "projection is not injective on rays (ray " + std::to_string(r) + ")";
            return res;
        }
        base.rays.push_back(std::move(f));
        phi.push_back(project(fan.rays[r], fiber_idx));
    }

    std::vector<Cone> fiber_cones;
    std::vector<Cone> base_cones;
    for (const auto &mc : fan.maximal_cones) {
        Cone fc;
        Cone bc;
        for (auto r : mc) {
            const bool in_fiber = std::find(fiber_rays.begin(), fiber_rays.end(), r) != fiber_rays.end();
            (in_fiber ? fc : bc).push_back(new_index[r]);
        }
        std::sort(fc.begin(), fc.end());
        std::sort(bc.begin(), bc.end());
        fiber_cones.push_back(std::move(fc));
        base_cones.push_back(std::move(bc));
    }
    fiber.maximal_cones = detail::inclusion_maximal(std::move(fiber_cones));
    base.maximal_cones = detail::inclusion_maximal(std::move(base_cones));

    const auto fiber_report = fan_validate(fiber);
    if (!fiber_report.is_valid) {
        res.reason = "fiber-ray fan is not a valid fan: " + fiber_report.violations.front();
        return res;
    }
    if (is_complete(fan) && !fiber_report.is_complete) {
        res.reason = "fiber-ray fan is not complete";
        return res;
    }
    const auto base_report = fan_validate(base);
    if (!base_report.is_valid) {
        res.reason = "projected base fan is not a valid fan: " + base_report.violations.front();
        return res;
    }

    TwistData t = make_twist(std::move(base), std::move(fiber), std::move(phi));
    // permute the input into (base, fiber) coordinate order before comparing
    Fan reordered = fan;
    std::vector<std::size_t> perm = base_idx;
    perm.insert(perm.end(), fiber_idx.begin(), fiber_idx.end());
    for (auto &r : reordered.rays) {
        r = project(r, perm);
    }
    if (!same_fan(twisted_product(t), reordered)) {
        res.reason = "reconstruction mismatch: the twisted product of the recovered data differs";
        return res;
    }
    res.data = std::move(t);
    return res;
}

/// Base divisor coefficients s * <Phi(f_j), lambda>, one per base ray; lambda in M_F (Q-linear).
inline RatVector character_divisor(const TwistData &t, const RationalVector &lambda)
{
    check_twist(t);
    if (lambda.size() != t.fiber.rank) {
        throw kernel_error("character_divisor: character has rank " + std::to_string(lambda.size())
                           + ", fiber rank is " + std::to_string(t.fiber.rank));
    }
    RatVector out;
    out.reserve(t.base.rays.size());
    for (const auto &v : t.phi.values_on_rays) {
        out.push_back(Rational(character_sign) * dot(v, lambda));
    }
    return out;
}

inline RatVector character_divisor(const TwistData &t, const LatticeVector &lambda)
{
    return character_divisor(t, to_rational(lambda));
}

struct ShearResult {
    TwistData data;
    IntMatrix matrix; // [[I_k, 0], [l, I_n]]
};

/// Phi'(f_j) = Phi(f_j) + l f_j for l in Hom(N_B, N_F), given as an n x k integer matrix.
inline ShearResult shear_equivalence(const TwistData &t, const IntMatrix &l)
{
    check_twist(t);
    const std::size_t k = t.base.rank;
    const std::size_t n = t.fiber.rank;
    if (l.size() != n
        || std::any_of(l.begin(), l.end(), [&](const IntVector &row) { return row.size() != k; })) {
        throw kernel_error("shear_equivalence: shear must be a " + std::to_string(n) + "x"
                           + std::to_string(k) + " matrix");
    }
    ShearResult res{t, linalg::identity(k + n)};
    for (std::size_t j = 0; j < t.base.rays.size(); ++j) {
        const auto lf = linalg::apply(l, t.base.rays[j]);
        for (std::size_t i = 0; i < n; ++i) {
            res.data.phi.values_on_rays[j][i] += lf[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            res.matrix[k + i][j] = l[i][j];
        }
    }
    return res;
}

/// Twist data of ET_m x_T X: base (P^m)^n, fiber the given fan, Phi = +u_l on the last ray of the
/// l-th P^m block so that c_top(lambda) = -sum_l lambda_l H_l (tautological convention).
inline TwistData borel_fan(const Fan &fan, long m)
{
    if (m < 0) {
        throw kernel_error("borel_fan: m must be nonnegative");
    }
    const auto rep = fan_validate(fan);
    if (!rep.is_valid || !rep.is_smooth || !rep.is_complete) {
        throw kernel_error("borel_fan: fan must be valid, smooth and complete");
    }
    const std::size_t n = fan.rank;
    const auto pm = projective_space_fan(static_cast<std::size_t>(m));
    Fan base = point_fan();
    for (std::size_t l = 0; l < n; ++l) {
        base = product_fan(base, pm);
    }
    std::vector<LatticeVector> phi(base.rays.size(), LatticeVector(n, Integer(0)));
    if (m > 0) {
        const std::size_t block = static_cast<std::size_t>(m) + 1;
        for (std::size_t l = 0; l < n; ++l) {
            phi[l * block + block - 1][l] = 1;
        }
    }
    return make_twist(std::move(base), fan, std::move(phi));
}

/// Twist data for the Hirzebruch surface F_a in the ray order of its standard picture:
/// base P^1 with rays (-1), (1); fiber P^1 with rays (1), (-1); Phi(1) = a, Phi(-1) = 0.
inline TwistData hirzebruch_twist(long a)
{
    Fan base{1, {{-1}, {1}}, {{0}, {1}}};
    Fan fiber{1, {{1}, {-1}}, {{0}, {1}}};
    return make_twist(std::move(base), std::move(fiber), {{0}, {Integer(a)}});
}

} // namespace fibertoric

#endif
