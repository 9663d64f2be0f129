#include <gtest/gtest.h>

#include "fibertoric/cohomology.hpp"
#include "fibertoric/linalg.hpp"
#include "support.hpp"

using namespace fibertoric;
using namespace testing_support;

namespace
{

std::vector<Fan> test_fans()
{
    return {p1(),
            p2(),
            p1xp1(),
            hirzebruch(0),
            hirzebruch(1),
            hirzebruch(2),
            hirzebruch(3),
            twisted_product(p2_over_p1(1, 0)),
            twisted_product(p2_over_p1(1, 1)),
            twisted_product(make_twist(p2(), p1(), {lv({1}), lv({0}), lv({-2})})),
            projective_space_fan(3)};
}

Monomial mono(std::size_t n, std::initializer_list<std::size_t> vars)
{
    Monomial m(n, 0);
    for (auto v : vars) {
        ++m[v];
    }
    return m;
}

/// Self-intersections on a complete smooth toric surface from v_prev + v_next = b v: D^2 = -b.
std::vector<Rational> surface_self_intersections(const Fan &fan)
{
    const std::size_t r = fan.rays.size();
    std::vector<std::size_t> order(r);
    for (std::size_t i = 0; i < r; ++i) {
        order[i] = i;
    }
    auto half = [&](std::size_t i) {
        const auto &v = fan.rays[i];
        return v[1] > 0 || (v[1] == 0 && v[0] > 0) ? 0 : 1;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (half(a) != half(b)) {
            return half(a) < half(b);
        }
        const auto &u = fan.rays[a];
        const auto &w = fan.rays[b];
        return u[0] * w[1] - u[1] * w[0] > 0;
    });
    std::vector<Rational> out(r);
    for (std::size_t k = 0; k < r; ++k) {
        const auto &prev = fan.rays[order[(k + r - 1) % r]];
        const auto &v = fan.rays[order[k]];
        const auto &next = fan.rays[order[(k + 1) % r]];
        const Integer s0 = prev[0] + next[0];
        const Integer s1 = prev[1] + next[1];
        // (s0, s1) = b * v
        const Integer b = v[0] != 0 ? s0 / v[0] : s1 / v[1];
        EXPECT_EQ(s0, b * v[0]);
        EXPECT_EQ(s1, b * v[1]);
        out[order[k]] = Rational(-b);
    }
    return out;
}

} // namespace

TEST(SRIdeal, Examples)
{
    EXPECT_EQ(sr_ideal(p1()), (std::vector<Cone>{{0, 1}}));
    EXPECT_EQ(sr_ideal(p2()), (std::vector<Cone>{{0, 1, 2}}));
    for (long a = 0; a <= 3; ++a) {
        EXPECT_EQ(sr_ideal(hirzebruch(a)), (std::vector<Cone>{{0, 1}, {2, 3}}));
    }
}

TEST(SRIdeal, MinimalNonFaces)
{
    for (const auto &fan : test_fans()) {
        const auto gens = sr_ideal(fan);
        const auto faces = enumerate_faces(fan).faces;
        auto is_face = [&](const Cone &c) {
            return std::any_of(faces.begin(), faces.end(), [&](const auto &f) { return f.second == c; });
        };
        for (const auto &g : gens) {
            EXPECT_FALSE(is_face(g));
            for (std::size_t drop = 0; drop < g.size(); ++drop) {
                Cone sub = g;
                sub.erase(sub.begin() + static_cast<long>(drop));
                EXPECT_TRUE(is_face(sub));
            }
        }
    }
}

TEST(LinearIdeal, Examples)
{
    EXPECT_EQ(linear_ideal(p1()), (std::vector<IntVector>{{1, -1}}));
    EXPECT_EQ(linear_ideal(p2()), (std::vector<IntVector>{{1, 0, -1}, {0, 1, -1}}));
    for (long a = 0; a <= 3; ++a) {
        // base character: y2 - y1; fiber character: x1 - x2 + a y2
        EXPECT_EQ(linear_ideal(hirzebruch(a)), (std::vector<IntVector>{{0, 0, -1, 1}, {1, -1, 0, a}}));
    }
}

TEST(GradedBasis, Dimensions)
{
    const auto pp2 = stanley_reisner_presentation(p2());
    EXPECT_EQ(graded_basis(pp2, 1).dimension(), 1U);
    EXPECT_EQ(graded_basis(pp2, 3).dimension(), 0U);
    for (long a = 0; a <= 3; ++a) {
        EXPECT_EQ(graded_basis(stanley_reisner_presentation(hirzebruch(a)), 1).dimension(), 2U);
    }
}

TEST(Ring, MultiplyExamples)
{
    const CohomologyRing h(p2());
    for (std::size_t i = 0; i < 3; ++i) {
        const auto x = h.ray_class(i);
        EXPECT_EQ(multiply(h.unit(), x), x);
        EXPECT_EQ(multiply(x, x), h.point_class());
        EXPECT_TRUE(multiply(multiply(x, x), x).is_zero());
    }
    for (long a = 0; a <= 3; ++a) {
        const CohomologyRing f(hirzebruch(a));
        auto pt = f.point_class();
        // ray 1 = (0,-1) squares to a * pt, ray 0 = (0,1) to -a * pt
        auto scaled = [&](long c) {
            RingClass s = pt;
            for (auto &v : s.coefficients) {
                v *= c;
            }
            return s;
        };
        EXPECT_EQ(multiply(f.ray_class(1), f.ray_class(1)), scaled(a));
        EXPECT_EQ(multiply(f.ray_class(0), f.ray_class(0)), scaled(-a));
    }
}

TEST(Ring, MultiplicationIsAssociativeAndCommutative)
{
    const CohomologyRing h(twisted_product(p2_over_p1(1, 1)));
    const std::size_t r = h.fan().rays.size();
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const auto a = h.ray_class(i);
            const auto b = h.ray_class(j);
            EXPECT_EQ(multiply(a, b), multiply(b, a));
            for (std::size_t k = 0; k < r; ++k) {
                const auto c = h.ray_class(k);
                EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
            }
        }
    }
}

TEST(Ring, TopDegreeNormalization)
{
    const CohomologyRing h(p2());
    EXPECT_EQ(h.degree(h.point_class()), 1);
    EXPECT_EQ(degree_of_top_class(h, h.point_class()), 1);
    RingClass zero = h.point_class();
    for (auto &c : zero.coefficients) {
        c = 0;
    }
    EXPECT_EQ(h.degree(zero), 0);
    EXPECT_THROW(h.degree(h.ray_class(0)), kernel_error);
    for (const auto &fan : test_fans()) {
        const CohomologyRing r(fan);
        for (const auto &c : fan.maximal_cones) {
            EXPECT_EQ(r.cone_class(c), r.point_class());
            EXPECT_EQ(r.degree(r.cone_class(c)), 1);
        }
    }
}

TEST(Intersection, Examples)
{
    const Divisor hline = div({1, 0, 0});
    EXPECT_EQ(intersection_number(p2(), {hline, hline}), 1);
    const auto p3 = projective_space_fan(3);
    const Divisor h3 = unit_divisor(4, 0);
    EXPECT_EQ(intersection_number(p3, {h3, h3, h3}), 1);
    // F_2: the ray (0,-1) squares to 2, the ray (0,1) to -2
    EXPECT_EQ(intersection_number(hirzebruch(2), {unit_divisor(4, 1), unit_divisor(4, 1)}), 2);
    EXPECT_EQ(intersection_number(hirzebruch(2), {unit_divisor(4, 0), unit_divisor(4, 0)}), -2);
    const Divisor d11 = div({1, 0, 1, 0});
    EXPECT_EQ(intersection_number(p1xp1(), {d11, d11}), 2);
    EXPECT_THROW(intersection_number(p2(), {hline}), kernel_error);
}

TEST(Intersection, SurfaceSelfIntersectionOracle)
{
    for (const auto &fan : {p2(), p1xp1(), hirzebruch(0), hirzebruch(1), hirzebruch(2), hirzebruch(3),
                            hirzebruch(-2), apply_unimodular(hirzebruch(3), IntMatrix{{2, 1}, {1, 1}})}) {
        const auto expected = surface_self_intersections(fan);
        const CohomologyRing h(fan);
        for (std::size_t i = 0; i < fan.rays.size(); ++i) {
            const Divisor d = unit_divisor(fan.rays.size(), i);
            EXPECT_EQ(self_intersection(h, d), expected[i]) << "ray " << i;
        }
    }
}

TEST(Intersection, SymmetricAndMultilinear)
{
    const Fan fan = twisted_product(p2_over_p1(1, 1));
    const CohomologyRing h(fan);
    const Divisor a = div({1, 0, q(2, 3), -1, 0});
    const Divisor b = div({0, 2, 1, 0, q(-1, 2)});
    const Divisor c = div({3, 0, 0, 1, 1});
    const Divisor d = div({q(1, 5), -1, 0, 2, 0});
    EXPECT_EQ(intersection_number(h, {a, b, c}), intersection_number(h, {c, a, b}));
    EXPECT_EQ(intersection_number(h, {a, b, c}), intersection_number(h, {b, c, a}));
    Divisor comb{RatVector(5)};
    const Rational s(3, 7);
    for (std::size_t i = 0; i < 5; ++i) {
        comb.coefficients[i] = a.coefficients[i] + s * d.coefficients[i];
    }
    EXPECT_EQ(intersection_number(h, {comb, b, c}),
              intersection_number(h, {a, b, c}) + s * intersection_number(h, {d, b, c}));
    // linearly equivalent divisors give equal numbers: add a principal divisor
    Divisor shifted = a;
    for (std::size_t i = 0; i < 5; ++i) {
        shifted.coefficients[i] += Rational(fan.rays[i][0] * 2 - fan.rays[i][2]);
    }
    EXPECT_EQ(intersection_number(h, {shifted, b, c}), intersection_number(h, {a, b, c}));
}

TEST(Betti, Examples)
{
    EXPECT_EQ(betti_numbers(p2()), (std::vector<std::size_t>{1, 1, 1}));
    for (long a = 0; a <= 3; ++a) {
        EXPECT_EQ(betti_numbers(hirzebruch(a)), (std::vector<std::size_t>{1, 2, 1}));
    }
    EXPECT_EQ(betti_numbers(p1xp1()), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(h_vector(p2()), (std::vector<Integer>{1, 1, 1}));
    EXPECT_EQ(h_vector(hirzebruch(1)), (std::vector<Integer>{1, 2, 1}));
    EXPECT_EQ(h_vector(p1()), (std::vector<Integer>{1, 1}));
}

TEST(Betti, InvariantsOnAllTestFans)
{
    for (const auto &fan : test_fans()) {
        const auto b = betti_numbers(fan);
        const auto hv = h_vector(fan);
        const auto oracle = h_vector_oracle(f_vector_oracle(fan), fan.rank);
        ASSERT_EQ(b.size(), fan.rank + 1);
        std::size_t sum = 0;
        for (std::size_t d = 0; d <= fan.rank; ++d) {
            EXPECT_EQ(Integer(b[d]), hv[d]);
            EXPECT_EQ(static_cast<long>(b[d]), oracle[d]);
            EXPECT_EQ(b[d], b[fan.rank - d]);
            sum += b[d];
        }
        EXPECT_EQ(b.front(), 1U);
        EXPECT_EQ(b.back(), 1U);
        EXPECT_EQ(sum, fan.maximal_cones.size());
    }
}

TEST(Betti, PoincarePairingIsNondegenerate)
{
    for (const auto &fan : test_fans()) {
        const CohomologyRing h(fan);
        for (unsigned d = 0; d <= h.rank(); ++d) {
            const auto &lo = h.ring()->basis(d).basis_monomials;
            const auto &hi = h.ring()->basis(h.rank() - d).basis_monomials;
            RatMatrix m;
            for (const auto &a : lo) {
                RatVector row;
                for (const auto &b : hi) {
                    row.push_back(h.degree(multiply(h.monomial_class(a), h.monomial_class(b))));
                }
                m.push_back(row);
            }
            EXPECT_EQ(linalg::rank(m, hi.size()), lo.size());
            EXPECT_EQ(lo.size(), hi.size());
        }
    }
}

TEST(Chern, Examples)
{
    const CohomologyRing l(p1());
    const auto cl = total_chern(l);
    EXPECT_EQ(cl[1], add(l.ray_class(0), l.ray_class(1)));
    EXPECT_EQ(l.degree(cl[1]), 2);
    EXPECT_EQ(euler_characteristic(p1()), 2);
    EXPECT_EQ(euler_characteristic(p2()), 3);
    for (long a = 0; a <= 3; ++a) {
        const CohomologyRing f(hirzebruch(a));
        const auto c = total_chern(f);
        EXPECT_EQ(f.degree(c[2]), 4);
        EXPECT_EQ(f.degree(multiply(c[1], c[1])), 8);
        EXPECT_EQ(euler_characteristic(f), 4);
    }
}

TEST(Chern, EulerCharacteristicCountsMaximalCones)
{
    for (const auto &fan : test_fans()) {
        EXPECT_EQ(euler_characteristic(fan), Integer(fan.maximal_cones.size()));
        const CohomologyRing h(fan);
        const auto c = total_chern(h);
        ASSERT_EQ(c.size(), fan.rank + 1);
        EXPECT_EQ(c[0], h.unit());
    }
}

TEST(Chern, SquarefreeExpansionModuloSR)
{
    for (const auto &fan : test_fans()) {
        Polynomial expected;
        for (const auto &[d, cone] : enumerate_faces(fan).faces) {
            Monomial m(fan.rays.size(), 0);
            for (auto i : cone) {
                m[i] = 1;
            }
            add_term(expected, m, 1);
        }
        EXPECT_EQ(chern_modulo_sr(fan), expected);
    }
}

TEST(Chern, ProjectionFormula)
{
    const std::vector<TwistData> ts{hirzebruch_data(2), p2_over_p1(1, 1),
                                    make_twist(p2(), p1(), {lv({1}), lv({0}), lv({-2})})};
    for (const auto &t : ts) {
        const Fan total = twisted_product(t);
        const CohomologyRing ht(total);
        const CohomologyRing hb(t.base);
        const std::size_t r = t.fiber.rays.size();
        const std::size_t s = t.base.rays.size();
        const unsigned k = static_cast<unsigned>(t.base.rank);
        for (const auto &alpha : monomials_of_degree(s, k)) {
            for (const auto &tau : t.fiber.maximal_cones) {
                Monomial m(r + s, 0);
                for (auto i : tau) {
                    m[i] = 1;
                }
                for (std::size_t j = 0; j < s; ++j) {
                    m[r + j] = alpha[j];
                }
                EXPECT_EQ(ht.degree(ht.monomial_class(m)), hb.degree(hb.monomial_class(alpha)));
            }
        }
    }
}

TEST(FiberedPresentation, Examples)
{
    for (long a = 0; a <= 3; ++a) {
        EXPECT_TRUE(check_fibered_presentation(hirzebruch_data(a)));
    }
    EXPECT_TRUE(check_fibered_presentation(p2_over_p1(0, 0)));
    EXPECT_TRUE(check_fibered_presentation(make_twist(p2(), p1(), {lv({0}), lv({0}), lv({0})})));
    EXPECT_TRUE(check_fibered_presentation(p2_over_p1(1, 0)));
    EXPECT_TRUE(check_fibered_presentation(p2_over_p1(1, 1)));
    EXPECT_TRUE(check_fibered_presentation(make_twist(p2(), p1(), {lv({1}), lv({0}), lv({-2})})));
}

TEST(FiberedPresentation, OppositeSignFails)
{
    // negating Phi negates every character divisor, i.e. flips the sign convention
    for (long a = 1; a <= 3; ++a) {
        const auto t = hirzebruch_data(a);
        const auto flipped = hirzebruch_data(-a);
        EXPECT_FALSE(same_relations(fibered_presentation(flipped),
                                    stanley_reisner_presentation(twisted_product(t)), 2));
    }
}

TEST(FiberedPresentation, VariablesAreFiberThenBase)
{
    const auto pres = fibered_presentation(hirzebruch_data(2));
    EXPECT_EQ(pres.num_vars, 4U);
    EXPECT_TRUE(same_relations(pres, stanley_reisner_presentation(hirzebruch(2)), 2));
    const auto x = mono(4, {1});
    EXPECT_FALSE(is_dead(pres, x));
    EXPECT_TRUE(is_dead(pres, mono(4, {0, 1})));
    EXPECT_TRUE(is_dead(pres, mono(4, {2, 3})));
}
