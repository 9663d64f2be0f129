#ifndef FIBERTORIC_FAN_HPP
#define FIBERTORIC_FAN_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "number.hpp"

namespace fibertoric
{

using LatticeVector = IntVector;
using RationalVector = RatVector;

/// A simplicial cone, stored as a sorted set of indices into its fan's ray list.
using Cone = std::vector<std::size_t>;

/// A simplicial fan. Rays are primitive lattice vectors, cones are sorted index sets.
struct Fan {
    std::size_t rank = 0;
    std::vector<LatticeVector> rays;
    std::vector<Cone> maximal_cones;

    friend bool operator==(const Fan &, const Fan &) = default;
};

struct ValidationReport {
    bool is_valid = true;
    bool is_smooth = true;
    bool is_complete = false;
    std::vector<std::string> violations;
};

struct FaceEnumeration {
    std::vector<std::pair<std::size_t, Cone>> faces; // (dimension, cone), zero cone first
    std::vector<std::size_t> f_vector;               // f_vector[i] = number of i-dimensional cones
};

inline LatticeVector primitive(const LatticeVector &v)
{
    Integer g = 0;
    for (const auto &x : v) {
        g = gcd(g, x);
    }
    if (g == 0) {
        throw kernel_error("zero vector has no primitive representative");
    }
    LatticeVector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(x / g);
    }
    return out;
}

inline bool is_primitive(const LatticeVector &v)
{
    Integer g = 0;
    for (const auto &x : v) {
        g = gcd(g, x);
    }
    return g == 1;
}

/// The point fan: rank 0, no rays, a single empty maximal cone.
inline Fan point_fan()
{
    return Fan{0, {}, {Cone{}}};
}

namespace detail
{

inline std::string cone_str(const Cone &c)
{
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        s += (i ? "," : "") + std::to_string(c[i]);
    }
    return s + "}";
}

inline std::string vec_str(const LatticeVector &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].str();
    }
    return s + ")";
}

inline std::string vec_str(const RationalVector &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + to_string(v[i]);
    }
    return s + ")";
}

inline RatMatrix ray_columns(const Fan &fan, const Cone &cone)
{
    RatMatrix a(fan.rank, RatVector(cone.size()));
    for (std::size_t j = 0; j < cone.size(); ++j) {
        for (std::size_t i = 0; i < fan.rank; ++i) {
            a[i][j] = fan.rays[cone[j]][i];
        }
    }
    return a;
}

inline IntMatrix ray_rows(const Fan &fan, const Cone &cone)
{
    IntMatrix a;
    a.reserve(cone.size());
    for (auto i : cone) {
        a.push_back(fan.rays[i]);
    }
    return a;
}

inline bool is_subset(const Cone &small, const Cone &big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Cone intersect(const Cone &a, const Cone &b)
{
    Cone out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// Coefficients c with x = sum c_j ray_j over the cone's rays, if x lies in the cone's span.
inline std::optional<RationalVector> cone_coordinates(const Fan &fan, const Cone &cone,
                                                      const RationalVector &x)
{
    if (x.size() != fan.rank) {
        throw kernel_error("cone_contains: rank mismatch (point has " + std::to_string(x.size())
                           + " entries, fan rank " + std::to_string(fan.rank) + ")");
    }
    return linalg::solve(detail::ray_columns(fan, cone), x, cone.size());
}

inline bool cone_contains(const Fan &fan, const Cone &cone, const RationalVector &x)
{
    const auto c = cone_coordinates(fan, cone, x);
    return c && std::all_of(c->begin(), c->end(), [](const Rational &v) { return v >= 0; });
}

inline bool is_smooth_cone(const Fan &fan, const Cone &cone)
{
    if (cone.empty()) {
        return true;
    }
    const auto inv = linalg::smith_invariants(detail::ray_rows(fan, cone));
    return inv.size() == cone.size()
           && std::all_of(inv.begin(), inv.end(), [](const Integer &d) { return d == 1; });
}

inline FaceEnumeration enumerate_faces(const Fan &fan)
{
    std::set<Cone> seen;
    for (const auto &mc : fan.maximal_cones) {
        const std::size_t k = mc.size();
        for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
            Cone face;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (1UL << i)) {
                    face.push_back(mc[i]);
                }
            }
            seen.insert(std::move(face));
        }
    }
    if (seen.empty()) {
        seen.insert(Cone{});
    }
    std::vector<Cone> sorted(seen.begin(), seen.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Cone &a, const Cone &b) { return a.size() < b.size(); });
    FaceEnumeration fe;
    std::size_t top = 0;
    for (const auto &c : sorted) {
        top = std::max(top, c.size());
    }
    fe.f_vector.assign(top + 1, 0);
    for (auto &c : sorted) {
        ++fe.f_vector[c.size()];
        fe.faces.emplace_back(c.size(), std::move(c));
    }
    return fe;
}

/// Wall condition: pure full dimension, every wall in exactly two maximal cones, connected wall graph.
inline bool is_complete(const Fan &fan)
{
    if (fan.maximal_cones.empty()) {
        return false;
    }
    for (const auto &c : fan.maximal_cones) {
        if (c.size() != fan.rank) {
            return false;
        }
    }
    if (fan.rank == 0) {
        return true;
    }
    std::map<Cone, std::vector<std::size_t>> walls;
    for (std::size_t m = 0; m < fan.maximal_cones.size(); ++m) {
        const auto &c = fan.maximal_cones[m];
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            Cone w;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i != drop) {
                    w.push_back(c[i]);
                }
            }
            walls[w].push_back(m);
        }
    }
    std::vector<std::size_t> parent(fan.maximal_cones.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (const auto &[w, owners] : walls) {
        if (owners.size() != 2) {
            return false;
        }
        parent[find(owners[0])] = find(owners[1]);
    }
    const std::size_t root = find(0);
    for (std::size_t m = 0; m < parent.size(); ++m) {
        if (find(m) != root) {
            return false;
        }
    }
    return true;
}

namespace detail
{

/// True when the set-theoretic intersection of two simplicial cones is the cone on their shared rays.
/// It suffices to look at the first cone: a point of the intersection that uses a ray of `a` outside
/// the shared set cannot lie in cone(shared), and conversely any point of the intersection inside
/// cone(shared) has unique coordinates in both cones.
inline bool meets_in_common_face(const Fan &fan, const Cone &a, const Cone &b)
{
    const Cone shared = intersect(a, b);
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    for (std::size_t i = 0; i < na; ++i) {
        if (std::binary_search(shared.begin(), shared.end(), a[i])) {
            continue;
        }
        // find c, d >= 0 with sum c_j a_j - sum d_j b_j = 0 and c_i = 1
        RatMatrix sys(fan.rank + 1, RatVector(na + nb, Rational(0)));
        RatVector rhs(fan.rank + 1, Rational(0));
        for (std::size_t r = 0; r < fan.rank; ++r) {
            for (std::size_t j = 0; j < na; ++j) {
                sys[r][j] = fan.rays[a[j]][r];
            }
            for (std::size_t j = 0; j < nb; ++j) {
                sys[r][na + j] = -fan.rays[b[j]][r];
            }
        }
        sys[fan.rank][i] = 1;
        rhs[fan.rank] = 1;
        if (linalg::feasible_point(sys, rhs, na + nb)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

inline ValidationReport fan_validate(const Fan &fan)
{
    ValidationReport rep;
    auto violate = [&](std::string msg) {
        rep.is_valid = false;
        rep.violations.push_back(std::move(msg));
    };
    std::vector<bool> used(fan.rays.size(), false);
    bool structurally_ok = true;
    for (std::size_t m = 0; m < fan.maximal_cones.size(); ++m) {
        const auto &c = fan.maximal_cones[m];
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= fan.rays.size()) {
                violate("maximal cone " + std::to_string(m) + " references missing ray "
                        + std::to_string(c[i]));
                structurally_ok = false;
            } else {
                used[c[i]] = true;
            }
            if (i > 0 && c[i - 1] >= c[i]) {
                violate("maximal cone " + std::to_string(m) + " is not a sorted index set");
                structurally_ok = false;
            }
        }
    }
    if (fan.maximal_cones.empty()) {
        violate("fan has no maximal cones");
        structurally_ok = false;
    }
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        if (fan.rays[i].size() != fan.rank) {
            violate("ray " + std::to_string(i) + " has wrong rank");
            structurally_ok = false;
            continue;
        }
        if (!is_primitive(fan.rays[i])) {
            violate("ray " + std::to_string(i) + " " + detail::vec_str(fan.rays[i])
                    + " is not primitive");
        }
        if (!used[i]) {
            violate("ray " + std::to_string(i) + " lies in no maximal cone");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (fan.rays[j] == fan.rays[i]) {
                violate("rays " + std::to_string(j) + " and " + std::to_string(i)
                        + " coincide");
            }
        }
    }
    if (!structurally_ok) {
        rep.is_smooth = false;
        return rep;
    }
    {
        const auto inv = linalg::smith_invariants(fan.rays);
        const bool spans = inv.size() == fan.rank
                           && std::all_of(inv.begin(), inv.end(),
                                          [](const Integer &d) { return d == 1; });
        if (!spans) {
            violate("rays do not span the lattice Z^" + std::to_string(fan.rank));
        }
    }
    bool simplicial = true;
    for (std::size_t m = 0; m < fan.maximal_cones.size(); ++m) {
        const auto &c = fan.maximal_cones[m];
        if (linalg::rank(detail::ray_rows(fan, c), fan.rank) != c.size()) {
            violate("maximal cone " + std::to_string(m) + " " + detail::cone_str(c)
                    + " is not simplicial");
            simplicial = false;
            rep.is_smooth = false;
        } else if (!is_smooth_cone(fan, c)) {
            rep.is_smooth = false;
        }
    }
    if (simplicial) {
        for (std::size_t a = 0; a < fan.maximal_cones.size(); ++a) {
            for (std::size_t b = a + 1; b < fan.maximal_cones.size(); ++b) {
                const auto &ca = fan.maximal_cones[a];
                const auto &cb = fan.maximal_cones[b];
                if (ca == cb || detail::is_subset(ca, cb) || detail::is_subset(cb, ca)) {
                    violate("maximal cones " + std::to_string(a) + " and " + std::to_string(b)
                            + " are nested");
                    continue;
                }
                if (!detail::meets_in_common_face(fan, ca, cb)) {
                    violate("maximal cones " + std::to_string(a) + " and " + std::to_string(b)
                            + " intersect outside their common face");
                }
            }
        }
    }
    rep.is_complete = rep.is_valid && is_complete(fan);
    if (rep.is_valid && !rep.is_complete) {
        bool pure = std::all_of(fan.maximal_cones.begin(), fan.maximal_cones.end(),
                                [&](const Cone &c) { return c.size() == fan.rank; });
        if (!pure) {
            // recorded, not a validity failure: lower-dimensional maximal cones rule out completeness
            rep.violations.push_back("fan is not pure-dimensional, so it is not complete");
        }
    }
    if (!rep.is_valid) {
        rep.is_smooth = false;
    }
    return rep;
}

/// Canonical form: rays sorted lexicographically, cones remapped, sorted, deduplicated.
inline Fan canonical(const Fan &fan)
{
    std::vector<std::size_t> order(fan.rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fan.rays[a] < fan.rays[b]; });
    std::vector<std::size_t> where(fan.rays.size());
    Fan out;
    out.rank = fan.rank;
    for (std::size_t k = 0; k < order.size(); ++k) {
        where[order[k]] = k;
        out.rays.push_back(fan.rays[order[k]]);
    }
    for (const auto &c : fan.maximal_cones) {
        Cone nc;
        for (auto i : c) {
            nc.push_back(where.at(i));
        }
        std::sort(nc.begin(), nc.end());
        out.maximal_cones.push_back(std::move(nc));
    }
    std::sort(out.maximal_cones.begin(), out.maximal_cones.end());
    out.maximal_cones.erase(std::unique(out.maximal_cones.begin(), out.maximal_cones.end()),
                            out.maximal_cones.end());
    return out;
}

inline bool same_fan(const Fan &a, const Fan &b)
{
    return canonical(a) == canonical(b);
}

inline Fan apply_unimodular(const Fan &fan, const IntMatrix &u)
{
    if (u.size() != fan.rank
        || std::any_of(u.begin(), u.end(), [&](const IntVector &r) { return r.size() != fan.rank; })) {
        throw kernel_error("apply_unimodular: matrix must be square of size " + std::to_string(fan.rank));
    }
    if (fan.rank > 0 && abs(linalg::determinant(u)) != 1) {
        throw kernel_error("apply_unimodular: matrix is not unimodular");
    }
    Fan out = fan;
    for (auto &r : out.rays) {
        r = primitive(linalg::apply(u, r));
    }
    return out;
}

/// Standard fan of P^m: rays e_1..e_m, -(e_1+...+e_m); maximal cones omit one ray each.
inline Fan projective_space_fan(std::size_t m)
{
    if (m == 0) {
        return point_fan();
    }
    Fan f;
    f.rank = m;
    for (std::size_t i = 0; i < m; ++i) {
        LatticeVector e(m, Integer(0));
        e[i] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.emplace_back(m, Integer(-1));
    for (std::size_t skip = m + 1; skip-- > 0;) {
        Cone c;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i != skip) {
                c.push_back(i);
            }
        }
        f.maximal_cones.push_back(std::move(c));
    }
    std::sort(f.maximal_cones.begin(), f.maximal_cones.end());
    return f;
}

/// Direct product fan in coordinates (first, second); rays of `first` come first.
inline Fan product_fan(const Fan &first, const Fan &second)
{
    Fan out;
    out.rank = first.rank + second.rank;
    for (const auto &r : first.rays) {
        LatticeVector v = r;
        v.resize(out.rank, Integer(0));
        out.rays.push_back(std::move(v));
    }
    for (const auto &r : second.rays) {
        LatticeVector v(first.rank, Integer(0));
        v.insert(v.end(), r.begin(), r.end());
        out.rays.push_back(std::move(v));
    }
    const std::size_t shift = first.rays.size();
    for (const auto &a : first.maximal_cones) {
        for (const auto &b : second.maximal_cones) {
            Cone c = a;
            for (auto i : b) {
                c.push_back(i + shift);
            }
            out.maximal_cones.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace fibertoric

#endif
