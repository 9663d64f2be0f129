#ifndef FIBERTORIC_TEST_SUPPORT_HPP
#define FIBERTORIC_TEST_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "fibertoric/cohomology.hpp"
#include "fibertoric/fan.hpp"
#include "fibertoric/number.hpp"
#include "fibertoric/polytope.hpp"
#include "fibertoric/twist.hpp"

namespace testing_support
{

using namespace fibertoric;

inline LatticeVector lv(std::initializer_list<long> xs)
{
    LatticeVector v;
    for (long x : xs) {
        v.push_back(Integer(x));
    }
    return v;
}

inline RationalVector rv(std::initializer_list<Rational> xs)
{
    return RationalVector(xs);
}

inline Rational q(long p, long d = 1)
{
    return Rational(p, d);
}

inline Divisor div(std::initializer_list<Rational> xs)
{
    return Divisor{RatVector(xs)};
}

inline Fan make_fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> cones)
{
    return Fan{rank, std::move(rays), std::move(cones)};
}

// Fans written out by hand, independent of the constructions under test.

inline Fan p1()
{
    return make_fan(1, {lv({1}), lv({-1})}, {{0}, {1}});
}

inline Fan p2()
{
    return make_fan(2, {lv({1, 0}), lv({0, 1}), lv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Fan p1xp1()
{
    return make_fan(2, {lv({1, 0}), lv({-1, 0}), lv({0, 1}), lv({0, -1})}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

/// Hirzebruch surface F_a in the twisted-product ray order (0,1),(0,-1),(-1,0),(1,a).
inline Fan hirzebruch(long a)
{
    return make_fan(2, {lv({0, 1}), lv({0, -1}), lv({-1, 0}), lv({1, a})}, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

/// Base P^1 (rays -1, +1), fiber P^2, Phi(-1) = 0, Phi(+1) = (u, v).
inline TwistData p2_over_p1(long u, long v)
{
    Fan base = make_fan(1, {lv({-1}), lv({1})}, {{0}, {1}});
    return make_twist(std::move(base), p2(), {lv({0, 0}), lv({u, v})});
}

inline TwistData hirzebruch_data(long a)
{
    Fan base = make_fan(1, {lv({-1}), lv({1})}, {{0}, {1}});
    Fan fiber = make_fan(1, {lv({1}), lv({-1})}, {{0}, {1}});
    return make_twist(std::move(base), std::move(fiber), {lv({0}), lv({a})});
}

inline Divisor unit_divisor(std::size_t size, std::size_t i, long c = 1)
{
    Divisor d{RatVector(size, Rational(0))};
    d.coefficients[i] = c;
    return d;
}

// Oracles

/// Shoelace area of a convex polygon given by its vertices in any order.
inline Rational shoelace_area(std::vector<RationalVector> pts)
{
    if (pts.size() < 3) {
        return 0;
    }
    RationalVector c{Rational(0), Rational(0)};
    for (const auto &p : pts) {
        c[0] += p[0];
        c[1] += p[1];
    }
    c[0] /= static_cast<long>(pts.size());
    c[1] /= static_cast<long>(pts.size());
    // angular sort around the centroid via exact half-plane + cross-product comparison
    auto half = [&](const RationalVector &p) {
        const Rational dx = p[0] - c[0];
        const Rational dy = p[1] - c[1];
        return dy > 0 || (dy == 0 && dx > 0) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RationalVector &a, const RationalVector &b) {
        const int ha = half(a);
        const int hb = half(b);
        if (ha != hb) {
            return ha < hb;
        }
        const Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return cross > 0;
    });
    Rational twice = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto &p = pts[i];
        const auto &r = pts[(i + 1) % pts.size()];
        twice += p[0] * r[1] - p[1] * r[0];
    }
    return abs(twice) / 2;
}

/// h-vector by direct expansion of sum_i f_{i-1} (t-1)^{n-i}, coefficients returned h_0..h_n.
inline std::vector<long> h_vector_oracle(const std::vector<std::size_t> &f, std::size_t n)
{
    std::vector<long> poly(n + 1, 0); // poly[j] = coefficient of t^j
    for (std::size_t i = 0; i <= n; ++i) {
        const long fi = static_cast<long>(f[i]);
        const std::size_t e = n - i;
        // (t-1)^e = sum_j C(e,j) t^j (-1)^{e-j}
        long c = 1;
        for (std::size_t j = 0; j <= e; ++j) {
            const long sign = (e - j) % 2 == 0 ? 1 : -1;
            poly[j] += fi * c * sign;
            c = c * static_cast<long>(e - j) / static_cast<long>(j + 1);
        }
    }
    // h_i is the coefficient of t^{n-i}
    std::vector<long> h(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        h[i] = poly[n - i];
    }
    return h;
}

/// Face count by brute force over all subsets of every maximal cone.
inline std::vector<std::size_t> f_vector_oracle(const Fan &fan)
{
    std::vector<std::vector<std::size_t>> seen;
    for (const auto &c : fan.maximal_cones) {
        const std::size_t d = c.size();
        for (unsigned mask = 0; mask < (1U << d); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < d; ++i) {
                if (mask & (1U << i)) {
                    face.push_back(c[i]);
                }
            }
            seen.push_back(face);
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<std::size_t> f(fan.rank + 1, 0);
    for (const auto &s : seen) {
        ++f[s.size()];
    }
    return f;
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace testing_support

#endif
