#ifndef FIBERTORIC_POLYTOPE_HPP
#define FIBERTORIC_POLYTOPE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "fan.hpp"
#include "linalg.hpp"
#include "number.hpp"
#include "polynomial.hpp"
#include "twist.hpp"

// Exact polytope geometry in M_R. Volumes use Lebesgue measure normalized so that a fundamental
// domain of M has volume 1; the factor n! of intersection theory is always kept explicit.

namespace fibertoric
{

/// { lambda : <lambda, normals[i]> <= bounds[i] for all i }
struct HPolytope {
    std::size_t rank = 0;
    std::vector<LatticeVector> normals;
    RatVector bounds;
};

/// Convex hull of finitely many points in convex position, sorted lexicographically.
struct VPolytope {
    std::size_t rank = 0;
    std::vector<RationalVector> vertices;

    bool empty() const
    {
        return vertices.empty();
    }

    friend bool operator==(const VPolytope &, const VPolytope &) = default;
};

/// Polynomial on M, one variable per coordinate.
using PolynomialOnM = Polynomial;

inline HPolytope divisor_polytope(const Fan &fan, const Divisor &d)
{
    if (d.coefficients.size() != fan.rays.size()) {
        throw kernel_error("divisor_polytope: divisor has " + std::to_string(d.coefficients.size())
                           + " coefficients, fan has " + std::to_string(fan.rays.size()) + " rays");
    }
    return HPolytope{fan.rank, fan.rays, d.coefficients};
}

namespace detail
{

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F &&f)
{
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// True when nonnegative combinations of the normals reach every direction.
inline bool positively_spanning(const std::vector<LatticeVector> &normals, std::size_t rank)
{
    for (std::size_t k = 0; k < rank; ++k) {
        for (int sign : {1, -1}) {
            RatMatrix a(rank, RatVector(normals.size()));
            RatVector b(rank, Rational(0));
            for (std::size_t i = 0; i < rank; ++i) {
                for (std::size_t j = 0; j < normals.size(); ++j) {
                    a[i][j] = normals[j][i];
                }
            }
            b[k] = sign;
            if (!linalg::feasible_point(a, b, normals.size())) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<RationalVector> unique_sorted(std::vector<RationalVector> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace detail

/// Vertex enumeration by solving every rank-sized subsystem of tight inequalities.
inline VPolytope vertices(const HPolytope &p)
{
    if (p.normals.size() != p.bounds.size()) {
        throw kernel_error("vertices: normals and bounds differ in length");
    }
    VPolytope out;
    out.rank = p.rank;
    if (!detail::positively_spanning(p.normals, p.rank)) {
        throw kernel_error("unbounded: divisor not nef in some direction");
    }
    auto feasible = [&](const RationalVector &x) {
        for (std::size_t i = 0; i < p.normals.size(); ++i) {
            if (dot(p.normals[i], x) > p.bounds[i]) {
                return false;
            }
        }
        return true;
    };
    if (p.rank == 0) {
        if (feasible(RationalVector{})) {
            out.vertices.emplace_back();
        }
        return out;
    }
    std::vector<RationalVector> pts;
    detail::for_each_subset(p.normals.size(), p.rank, [&](const std::vector<std::size_t> &idx) {
        RatMatrix a;
        RatVector b;
        for (auto i : idx) {
            a.push_back(to_rational(p.normals[i]));
            b.push_back(p.bounds[i]);
        }
        if (linalg::determinant(a) == 0) {
            return;
        }
        auto x = linalg::solve(a, b, p.rank);
        if (x && feasible(*x)) {
            pts.push_back(std::move(*x));
        }
    });
    out.vertices = detail::unique_sorted(std::move(pts));
    return out;
}

/// Affine dimension of the hull; -1 when empty.
inline long affine_dimension(const std::vector<RationalVector> &pts, std::size_t rank)
{
    if (pts.empty()) {
        return -1;
    }
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVector d(rank);
        for (std::size_t k = 0; k < rank; ++k) {
            d[k] = pts[i][k] - pts[0][k];
        }
        diffs.push_back(std::move(d));
    }
    return static_cast<long>(linalg::rank(diffs, rank));
}

inline long affine_dimension(const VPolytope &p)
{
    return affine_dimension(p.vertices, p.rank);
}

/// Extreme points of a finite point set: drops every point that is a convex combination of the rest.
inline std::vector<RationalVector> extreme_points(std::vector<RationalVector> pts, std::size_t rank)
{
    pts = detail::unique_sorted(std::move(pts));
    for (std::size_t i = pts.size(); i-- > 0;) {
        if (pts.size() <= 1) {
            break;
        }
        const std::size_t others = pts.size() - 1;
        RatMatrix a(rank + 1, RatVector(others));
        RatVector b(rank + 1);
        std::size_t col = 0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) {
                continue;
            }
            for (std::size_t k = 0; k < rank; ++k) {
                a[k][col] = pts[j][k];
            }
            a[rank][col] = 1;
            ++col;
        }
        for (std::size_t k = 0; k < rank; ++k) {
            b[k] = pts[i][k];
        }
        b[rank] = 1;
        if (linalg::feasible_point(a, b, others)) {
            pts.erase(pts.begin() + static_cast<long>(i));
        }
    }
    return pts;
}

inline VPolytope convex_hull(std::vector<RationalVector> pts, std::size_t rank)
{
    return VPolytope{rank, extreme_points(std::move(pts), rank)};
}

namespace detail
{

using Simplex = std::vector<RationalVector>;

/// Facets (as index sets into pts) of conv(pts), where pts has affine dimension k >= 1.
inline std::vector<std::vector<std::size_t>> facets(const std::vector<RationalVector> &pts,
                                                    std::size_t k)
{
    const std::size_t ambient = pts.front().size();
    // coordinates on which projection is injective on the affine hull
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVector d(ambient);
        for (std::size_t c = 0; c < ambient; ++c) {
            d[c] = pts[i][c] - pts[0][c];
        }
        diffs.push_back(std::move(d));
    }
    const auto coords = linalg::rref(diffs, ambient).pivots;
    std::vector<RationalVector> proj;
    for (const auto &p : pts) {
        RationalVector q;
        for (auto c : coords) {
            q.push_back(p[c]);
        }
        proj.push_back(std::move(q));
    }
    std::set<std::vector<std::size_t>> found;
    for_each_subset(proj.size(), k, [&](const std::vector<std::size_t> &idx) {
        RatMatrix sys;
        for (std::size_t j = 1; j < idx.size(); ++j) {
            RatVector d(k);
            for (std::size_t c = 0; c < k; ++c) {
                d[c] = proj[idx[j]][c] - proj[idx[0]][c];
            }
            sys.push_back(std::move(d));
        }
        const auto ns = linalg::nullspace(sys, k);
        if (ns.size() != 1) {
            return; // not affinely independent
        }
        const auto &normal = ns.front();
        const Rational level = dot(normal, proj[idx[0]]);
        bool below = false;
        bool above = false;
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < proj.size(); ++i) {
            const Rational v = dot(normal, proj[i]);
            if (v < level) {
                below = true;
            } else if (v > level) {
                above = true;
            } else {
                on.push_back(i);
            }
        }
        if (!(below && above)) {
            found.insert(std::move(on));
        }
    });
    return {found.begin(), found.end()};
}

inline void triangulate_rec(const std::vector<RationalVector> &pts, std::size_t k, bool greatest,
                            std::vector<Simplex> &out)
{
    if (k == 0) {
        out.push_back({pts.front()});
        return;
    }
    const auto apex_it = greatest ? std::max_element(pts.begin(), pts.end())
                                  : std::min_element(pts.begin(), pts.end());
    const std::size_t apex = static_cast<std::size_t>(apex_it - pts.begin());
    for (const auto &facet : facets(pts, k)) {
        if (std::find(facet.begin(), facet.end(), apex) != facet.end()) {
            continue;
        }
        std::vector<RationalVector> sub;
        for (auto i : facet) {
            sub.push_back(pts[i]);
        }
        std::vector<Simplex> inner;
        triangulate_rec(sub, k - 1, greatest, inner);
        for (auto &s : inner) {
            s.push_back(pts[apex]);
            out.push_back(std::move(s));
        }
    }
}

inline Rational simplex_det(const Simplex &s)
{
    const std::size_t d = s.size() - 1;
    RatMatrix m(d, RatVector(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            m[i][c] = s[i + 1][c] - s[0][c];
        }
    }
    return abs(linalg::determinant(m));
}

} // namespace detail

/// Triangulation of a full-dimensional polytope by coning from the lexicographically least vertex
/// (or greatest, for cross-checks) over recursively triangulated facets.
inline std::vector<detail::Simplex> triangulate(const VPolytope &p, bool from_greatest = false)
{
    std::vector<detail::Simplex> out;
    if (affine_dimension(p) != static_cast<long>(p.rank)) {
        return out;
    }
    detail::triangulate_rec(detail::unique_sorted(p.vertices), p.rank, from_greatest, out);
    return out;
}

inline Rational volume(const VPolytope &p, bool from_greatest = false)
{
    if (p.rank == 0) {
        return p.empty() ? Rational(0) : Rational(1);
    }
    Rational total = 0;
    for (const auto &s : triangulate(p, from_greatest)) {
        total += detail::simplex_det(s);
    }
    return total / Rational(factorial(static_cast<unsigned>(p.rank)));
}

inline VPolytope minkowski_sum(const VPolytope &p, const VPolytope &q)
{
    if (p.rank != q.rank) {
        throw kernel_error("minkowski_sum: rank mismatch");
    }
    std::vector<RationalVector> pts;
    for (const auto &a : p.vertices) {
        for (const auto &b : q.vertices) {
            RationalVector s(p.rank);
            for (std::size_t k = 0; k < p.rank; ++k) {
                s[k] = a[k] + b[k];
            }
            pts.push_back(std::move(s));
        }
    }
    return convex_hull(std::move(pts), p.rank);
}

inline VPolytope dilate(const VPolytope &p, const Rational &c)
{
    std::vector<RationalVector> pts = p.vertices;
    for (auto &v : pts) {
        for (auto &x : v) {
            x *= c;
        }
    }
    return VPolytope{p.rank, detail::unique_sorted(std::move(pts))};
}

/// Vol(P_1, ..., P_n) = (1/n!) sum_{S nonempty} (-1)^{n-|S|} vol(sum_{i in S} P_i).
inline Rational mixed_volume(const std::vector<VPolytope> &polys)
{
    const std::size_t n = polys.size();
    for (const auto &p : polys) {
        if (p.rank != n) {
            throw kernel_error("mixed_volume: need exactly rank-many polytopes of rank "
                               + std::to_string(n));
        }
    }
    if (n == 0) {
        return 1;
    }
    Rational total = 0;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        VPolytope sum{n, {RationalVector(n, Rational(0))}};
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1UL << i)) {
                sum = minkowski_sum(sum, polys[i]);
                ++count;
            }
        }
        const Rational v = volume(sum);
        total += (n - count) % 2 == 0 ? v : Rational(-v);
    }
    return total / Rational(factorial(static_cast<unsigned>(n)));
}

namespace detail
{

struct Wall {
    std::size_t cone; // sigma
    std::size_t opposite_ray; // ray of the neighbouring cone not in sigma
};

inline std::vector<Wall> walls(const Fan &fan)
{
    std::vector<Wall> out;
    for (std::size_t a = 0; a < fan.maximal_cones.size(); ++a) {
        for (std::size_t b = 0; b < fan.maximal_cones.size(); ++b) {
            if (a == b) {
                continue;
            }
            const auto shared = intersect(fan.maximal_cones[a], fan.maximal_cones[b]);
            if (shared.size() + 1 != fan.rank || fan.maximal_cones[b].size() != fan.rank) {
                continue;
            }
            for (auto r : fan.maximal_cones[b]) {
                if (!std::binary_search(shared.begin(), shared.end(), r)) {
                    out.push_back({a, r});
                }
            }
        }
    }
    return out;
}

/// m_sigma with <m_sigma, e_i> = h_i on the rays of sigma.
inline RationalVector local_character(const Fan &fan, const Cone &sigma, const Divisor &d)
{
    RatMatrix a;
    RatVector b;
    for (auto i : sigma) {
        a.push_back(to_rational(fan.rays[i]));
        b.push_back(d.coefficients[i]);
    }
    auto m = linalg::solve(a, b, fan.rank);
    if (!m) {
        throw kernel_error("local character: inconsistent cone system");
    }
    return *m;
}

inline bool convex_across_walls(const Fan &fan, const Divisor &d, bool strict)
{
    if (d.coefficients.size() != fan.rays.size()) {
        throw kernel_error("divisor length does not match the number of rays");
    }
    detail::require_smooth_complete(fan, "convexity check");
    std::vector<RationalVector> m;
    for (const auto &c : fan.maximal_cones) {
        m.push_back(local_character(fan, c, d));
    }
    for (const auto &w : walls(fan)) {
        const Rational v = dot(m[w.cone], fan.rays[w.opposite_ray]);
        const Rational h = d.coefficients[w.opposite_ray];
        if (strict ? !(v < h) : !(v <= h)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Strict convexity of the support function across every wall.
inline bool is_ample(const Fan &fan, const Divisor &d)
{
    return detail::convex_across_walls(fan, d, true);
}

/// Convexity (not necessarily strict) across every wall; the divisor polytope is then genuine.
inline bool is_nef(const Fan &fan, const Divisor &d)
{
    return detail::convex_across_walls(fan, d, false);
}

/// Divisor on the twisted fan: fiber coefficients on fiber rays, base coefficients on lifted rays.
inline Divisor lifted_divisor(const TwistData &t, const Divisor &fiber, const Divisor &base)
{
    if (fiber.coefficients.size() != t.fiber.rays.size()
        || base.coefficients.size() != t.base.rays.size()) {
        throw kernel_error("lifted_divisor: divisor lengths do not match the fans");
    }
    Divisor d = fiber;
    d.coefficients.insert(d.coefficients.end(), base.coefficients.begin(), base.coefficients.end());
    return d;
}

inline Divisor lifted_divisor(const TwistData &t, const Divisor &fiber)
{
    return lifted_divisor(t, fiber, Divisor{RatVector(t.base.rays.size(), Rational(0))});
}

/// Delta~ = {(x, lambda) : lambda in Delta_h, x in Delta_lambda}, coordinates (base, fiber).
inline VPolytope lift_polytope(const TwistData &t, const Divisor &fiber_divisor)
{
    check_twist(t);
    if (!is_nef(t.fiber, fiber_divisor)) {
        throw kernel_error("lift_polytope: fiber divisor is not nef");
    }
    const auto delta = vertices(divisor_polytope(t.fiber, fiber_divisor));
    const std::size_t k = t.base.rank;
    std::vector<RationalVector> pts;
    for (const auto &lambda : delta.vertices) {
        const Divisor dl{character_divisor(t, lambda)};
        if (k > 0 && !is_nef(t.base, dl)) {
            throw kernel_error("lift_polytope: D_lambda is not nef at vertex " + detail::vec_str(lambda));
        }
        const auto fiber_poly = vertices(divisor_polytope(t.base, dl));
        for (const auto &x : fiber_poly.vertices) {
            RationalVector p = x;
            p.insert(p.end(), lambda.begin(), lambda.end());
            pts.push_back(std::move(p));
        }
    }
    return convex_hull(std::move(pts), k + t.fiber.rank);
}

/// Exact integral over a full-dimensional polytope (zero otherwise), via the simplex moment formula
/// int_{t >= 0, sum t <= 1} t^b dt = prod(b_i!) / (d + |b|)!.
inline Rational integrate_polynomial(const PolynomialOnM &f, const VPolytope &p)
{
    const std::size_t d = p.rank;
    if (d == 0) {
        if (p.empty()) {
            return 0;
        }
        Rational c = 0;
        for (const auto &[m, v] : f) {
            c += v;
        }
        return c;
    }
    Rational total = 0;
    for (const auto &s : triangulate(p)) {
        // x_i = v0_i + sum_j t_j (v_j - v0)_i
        std::vector<Polynomial> coord(d);
        for (std::size_t i = 0; i < d; ++i) {
            add_term(coord[i], Monomial(d, 0), s[0][i]);
            for (std::size_t j = 1; j <= d; ++j) {
                add_term(coord[i], variable(d, j - 1), s[j][i] - s[0][i]);
            }
        }
        Polynomial pulled;
        for (const auto &[m, c] : f) {
            if (m.size() != d) {
                throw kernel_error("integrate_polynomial: polynomial has wrong number of variables");
            }
            Polynomial term = constant_polynomial(d, c);
            for (std::size_t i = 0; i < d; ++i) {
                term = term * power(coord[i], m[i], d);
            }
            pulled = pulled + term;
        }
        Rational integral = 0;
        for (const auto &[m, c] : pulled) {
            Integer num = 1;
            for (auto e : m) {
                num *= factorial(e);
            }
            integral += c * Rational(num, factorial(static_cast<unsigned>(d) + total_degree(m)));
        }
        total += integral * detail::simplex_det(s);
    }
    return total;
}

namespace detail
{

/// All exponent vectors of length parts summing to total.
inline std::vector<std::vector<unsigned>> compositions(std::size_t parts, unsigned total)
{
    std::vector<std::vector<unsigned>> out;
    for (auto &m : monomials_of_degree(parts, total)) {
        out.push_back(std::move(m));
    }
    return out;
}

inline Integer multinomial(const std::vector<unsigned> &alpha)
{
    unsigned total = 0;
    Integer den = 1;
    for (auto a : alpha) {
        total += a;
        den *= factorial(a);
    }
    return factorial(total) / den;
}

} // namespace detail

/// (D_B + c(lambda))^k as a polynomial in lambda, coefficients from base intersection numbers.
inline PolynomialOnM base_degree_polynomial(const TwistData &t, const Divisor &base_divisor)
{
    const CohomologyRing hb(t.base);
    const std::size_t n = t.fiber.rank;
    const unsigned k = static_cast<unsigned>(t.base.rank);
    std::vector<Divisor> chars;
    for (std::size_t l = 0; l < n; ++l) {
        LatticeVector u(n, Integer(0));
        u[l] = 1;
        chars.push_back(Divisor{character_divisor(t, u)});
    }
    PolynomialOnM poly;
    for (const auto &alpha : detail::compositions(n + 1, k)) {
        std::vector<Divisor> factors(alpha[0], base_divisor);
        for (std::size_t l = 0; l < n; ++l) {
            factors.insert(factors.end(), alpha[l + 1], chars[l]);
        }
        const Rational deg = intersection_number(hb, factors);
        Monomial m(alpha.begin() + 1, alpha.end());
        add_term(poly, m, Rational(detail::multinomial(alpha)) * deg);
    }
    return poly;
}

/// ((n+k)!/k!) * int_{Delta_h} (D_B + c(lambda))^k dmu(lambda)
inline Rational bkk_rhs(const TwistData &t, const Divisor &fiber_divisor, const Divisor &base_divisor)
{
    check_twist(t);
    if (!is_nef(t.fiber, fiber_divisor)) {
        throw kernel_error("bkk_rhs: fiber divisor is not nef");
    }
    const auto delta = vertices(divisor_polytope(t.fiber, fiber_divisor));
    const unsigned n = static_cast<unsigned>(t.fiber.rank);
    const unsigned k = static_cast<unsigned>(t.base.rank);
    const Rational integral = integrate_polynomial(base_degree_polynomial(t, base_divisor), delta);
    return integral * Rational(factorial(n + k), factorial(k));
}

struct ProofIdentity {
    bool computed = false;
    std::string skipped_reason;
    Rational total_volume;      // Vol(Delta~_h + P_B)
    Rational fiberwise_integral; // int Vol(Delta_lambda + P_B) dmu(lambda)
    bool equal = false;
};

struct BkkReport {
    Rational lhs; // k! (p^*D_B + D~_h)^{n+k}
    Rational rhs; // (n+k)! int_{Delta_h} (D_B + c(lambda))^k
    bool equal = false;
    ProofIdentity proof_identity;
};

/// int_{Delta_h} Vol_{M_B}(Delta_lambda + P_B) dmu(lambda), computed from genuine mixed volumes
/// on each simplex of a triangulation of Delta_h, where Delta_lambda is Minkowski-linear.
inline Rational fiberwise_volume_integral(const TwistData &t, const VPolytope &delta,
                                          const VPolytope &base_polytope)
{
    const std::size_t n = t.fiber.rank;
    const std::size_t k = t.base.rank;
    if (n == 0) {
        return volume(base_polytope);
    }
    Rational total = 0;
    for (const auto &s : triangulate(delta)) {
        std::vector<VPolytope> q;
        for (const auto &w : s) {
            q.push_back(vertices(divisor_polytope(t.base, Divisor{character_divisor(t, w)})));
        }
        q.push_back(base_polytope);
        // Vol(sum_i beta_i Q_i + P_B) = sum_gamma k!/gamma! MV(Q^gamma) beta^gamma', P_B weight 1
        Rational integral = 0;
        for (const auto &gamma : detail::compositions(n + 2, static_cast<unsigned>(k))) {
            std::vector<VPolytope> args;
            for (std::size_t i = 0; i < gamma.size(); ++i) {
                args.insert(args.end(), gamma[i], q[i]);
            }
            const Rational mv = mixed_volume(args);
            if (mv == 0) {
                continue;
            }
            // Dirichlet moment over the simplex in barycentric coordinates beta_0..beta_n
            Integer num = 1;
            unsigned deg = 0;
            for (std::size_t i = 0; i <= n; ++i) {
                num *= factorial(gamma[i]);
                deg += gamma[i];
            }
            const Rational moment(num, factorial(static_cast<unsigned>(n) + deg));
            integral += Rational(detail::multinomial(gamma)) * mv * moment;
        }
        total += integral * detail::simplex_det(s);
    }
    return total;
}

inline BkkReport bkk_check(const TwistData &t, const Divisor &fiber_divisor, const Divisor &base_divisor)
{
    check_twist(t);
    const unsigned n = static_cast<unsigned>(t.fiber.rank);
    const unsigned k = static_cast<unsigned>(t.base.rank);
    BkkReport rep;
    const CohomologyRing total(twisted_product(t));
    rep.lhs = Rational(factorial(k)) * self_intersection(total, lifted_divisor(t, fiber_divisor, base_divisor));
    rep.rhs = Rational(factorial(k)) * bkk_rhs(t, fiber_divisor, base_divisor);
    rep.equal = rep.lhs == rep.rhs;

    auto &pi = rep.proof_identity;
    if (k > 0 && !is_nef(t.base, base_divisor)) {
        pi.skipped_reason = "base divisor is not nef";
        return rep;
    }
    VPolytope lift;
    try {
        lift = lift_polytope(t, fiber_divisor);
    } catch (const kernel_error &e) {
        pi.skipped_reason = e.what();
        return rep;
    }
    const auto pb = vertices(divisor_polytope(t.base, base_divisor));
    VPolytope pb_embedded{k + n, {}};
    for (const auto &x : pb.vertices) {
        RationalVector v = x;
        v.resize(k + n, Rational(0));
        pb_embedded.vertices.push_back(std::move(v));
    }
    pi.total_volume = volume(minkowski_sum(lift, pb_embedded));
    pi.fiberwise_integral = fiberwise_volume_integral(
        t, vertices(divisor_polytope(t.fiber, fiber_divisor)), pb);
    pi.equal = pi.total_volume == pi.fiberwise_integral;
    pi.computed = true;
    return rep;
}

} // namespace fibertoric

#endif
