// Walks through the Hirzebruch surface F_2 as a twisted product of two projective lines.
#include <iostream>

#include "fibertoric/cohomology.hpp"
#include "fibertoric/equivariant.hpp"
#include "fibertoric/json_io.hpp"
#include "fibertoric/polytope.hpp"
#include "fibertoric/twist.hpp"

using namespace fibertoric;

int main()
{
    const TwistData t = hirzebruch_twist(2);
    const Fan f2 = twisted_product(t);
    std::cout << "fan: " << json::to_json(f2).dump() << "\n";

    const CohomologyRing h(f2);
    std::cout << "betti:";
    for (auto b : h.betti_numbers()) {
        std::cout << ' ' << b;
    }
    std::cout << "\neuler characteristic: " << euler_characteristic(h) << "\n";
    for (std::size_t i = 0; i < f2.rays.size(); ++i) {
        Divisor d{RatVector(f2.rays.size(), Rational(0))};
        d.coefficients[i] = 1;
        std::cout << "self-intersection of ray " << i << ": " << to_string(self_intersection(h, d)) << "\n";
    }

    // fiber O(1) and a base point
    const Divisor fiber{{0, 1}};
    const Divisor base{{0, 1}};
    const auto bkk = bkk_check(t, fiber, base);
    std::cout << "fibered BKK: " << to_string(bkk.lhs) << " = " << to_string(bkk.rhs) << "\n";
    std::cout << "lift polytope: " << json::to_json(lift_polytope(t, fiber)).dump() << "\n";

    const auto eq = equivariant_consistency_check(projective_space_fan(2), 1);
    std::cout << "P^2, m=1 truncated dims:";
    for (auto d : eq.truncated_dims) {
        std::cout << ' ' << d;
    }
    std::cout << (eq.consistent ? " (consistent)" : " (inconsistent)") << "\n";
}
