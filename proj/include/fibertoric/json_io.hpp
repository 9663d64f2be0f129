#ifndef FIBERTORIC_JSON_IO_HPP
#define FIBERTORIC_JSON_IO_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomology.hpp"
#include "fan.hpp"
#include "number.hpp"
#include "polytope.hpp"
#include "twist.hpp"

namespace fibertoric::json
{

// Insertion-ordered: the Fan schema fixes its own key order, every other document inserts keys sorted.
using Json = nlohmann::ordered_json;

/// Malformed input document (as opposed to a well-formed but mathematically invalid one).
class parse_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline const Integer &json_safe_limit()
{
    static const Integer limit = Integer(1) << 53;
    return limit;
}

/// JSON number when |z| < 2^53, decimal string otherwise.
inline Json to_json(const Integer &z)
{
    if (abs(z) < json_safe_limit()) {
        return z.convert_to<long long>();
    }
    return z.str();
}

/// Canonical "p/q" string (or "p" when integral).
inline Json rational_string(const Rational &q)
{
    return to_string(q);
}

/// Integral values as JSON integers (strings past 2^53), others as "p/q".
inline Json to_json(const Rational &q)
{
    return is_integral(q) ? to_json(numerator(q)) : Json(to_string(q));
}

inline Integer integer_from_json(const Json &j, const std::string &where)
{
    try {
        if (j.is_number_integer()) {
            return j.is_number_unsigned() ? Integer(j.get<unsigned long long>())
                                          : Integer(j.get<long long>());
        }
        if (j.is_string()) {
            const auto s = j.get<std::string>();
            if (s.find('/') != std::string::npos) {
                throw parse_error(where + ": expected an integer, got \"" + s + "\"");
            }
            return numerator(parse_rational(s));
        }
    } catch (const kernel_error &e) {
        throw parse_error(where + ": " + e.what());
    }
    throw parse_error(where + ": expected an integer");
}

inline Rational rational_from_json(const Json &j, const std::string &where)
{
    try {
        if (j.is_number_integer()) {
            return Rational(integer_from_json(j, where));
        }
        if (j.is_string()) {
            return parse_rational(j.get<std::string>());
        }
    } catch (const kernel_error &e) {
        throw parse_error(where + ": " + e.what());
    }
    throw parse_error(where + ": expected an integer or a \"p/q\" string");
}

inline const Json &field(const Json &j, const char *key, const std::string &where)
{
    if (!j.is_object() || !j.contains(key)) {
        throw parse_error(where + ": missing key \"" + key + "\"");
    }
    return j.at(key);
}

inline const Json &array_field(const Json &j, const char *key, const std::string &where)
{
    const Json &a = field(j, key, where);
    if (!a.is_array()) {
        throw parse_error(where + ": \"" + key + "\" must be an array");
    }
    return a;
}

inline Json to_json(const LatticeVector &v)
{
    Json a = Json::array();
    for (const auto &x : v) {
        a.push_back(to_json(x));
    }
    return a;
}

inline Json to_json(const RationalVector &v)
{
    Json a = Json::array();
    for (const auto &x : v) {
        a.push_back(to_json(x));
    }
    return a;
}

inline Json to_json(const Fan &fan)
{
    Json j;
    j["lattice_rank"] = fan.rank;
    Json rays = Json::array();
    for (const auto &r : fan.rays) {
        rays.push_back(to_json(r));
    }
    j["rays"] = std::move(rays);
    Json cones = Json::array();
    for (const auto &c : fan.maximal_cones) {
        Json cj = Json::array();
        for (auto i : c) {
            cj.push_back(i);
        }
        cones.push_back(std::move(cj));
    }
    j["maximal_cones"] = std::move(cones);
    return j;
}

inline LatticeVector lattice_vector_from_json(const Json &j, std::size_t rank, const std::string &where)
{
    if (!j.is_array() || j.size() != rank) {
        throw parse_error(where + ": expected an array of " + std::to_string(rank) + " integers");
    }
    LatticeVector v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        v.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return v;
}

inline Fan fan_from_json(const Json &j, const std::string &where = "fan")
{
    const Json &rank = field(j, "lattice_rank", where);
    if (!rank.is_number_unsigned()) {
        throw parse_error(where + ": lattice_rank must be a nonnegative integer");
    }
    Fan fan;
    fan.rank = rank.get<std::size_t>();
    const Json &rays = array_field(j, "rays", where);
    for (std::size_t i = 0; i < rays.size(); ++i) {
        fan.rays.push_back(
            lattice_vector_from_json(rays[i], fan.rank, where + ".rays[" + std::to_string(i) + "]"));
    }
    const Json &cones = array_field(j, "maximal_cones", where);
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const std::string w = where + ".maximal_cones[" + std::to_string(i) + "]";
        if (!cones[i].is_array()) {
            throw parse_error(w + ": expected an array of ray indices");
        }
        Cone c;
        for (const auto &x : cones[i]) {
            if (!x.is_number_unsigned() || x.get<std::size_t>() >= fan.rays.size()) {
                throw parse_error(w + ": ray index out of range");
            }
            c.push_back(x.get<std::size_t>());
        }
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
            throw parse_error(w + ": repeated ray index");
        }
        fan.maximal_cones.push_back(std::move(c));
    }
    return fan;
}

inline Json to_json(const TwistData &t)
{
    Json j;
    j["base"] = to_json(t.base);
    j["fiber"] = to_json(t.fiber);
    Json phi = Json::array();
    for (const auto &v : t.phi.values_on_rays) {
        phi.push_back(to_json(v));
    }
    j["phi"] = std::move(phi);
    return j;
}

inline TwistData twist_from_json(const Json &j, const std::string &where = "twist")
{
    Fan base = fan_from_json(field(j, "base", where), where + ".base");
    Fan fiber = fan_from_json(field(j, "fiber", where), where + ".fiber");
    const Json &phi = array_field(j, "phi", where);
    if (phi.size() != base.rays.size()) {
        throw parse_error(where + ".phi: expected one value per base ray (" + std::to_string(base.rays.size())
                          + "), got " + std::to_string(phi.size()));
    }
    std::vector<LatticeVector> values;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        values.push_back(
            lattice_vector_from_json(phi[i], fiber.rank, where + ".phi[" + std::to_string(i) + "]"));
    }
    return make_twist(std::move(base), std::move(fiber), std::move(values));
}

inline Json to_json(const Divisor &d)
{
    Json j;
    j["coefficients"] = to_json(d.coefficients);
    return j;
}

inline Divisor divisor_from_json(const Json &j, const std::string &where = "divisor")
{
    const Json &c = array_field(j, "coefficients", where);
    Divisor d;
    for (std::size_t i = 0; i < c.size(); ++i) {
        d.coefficients.push_back(rational_from_json(c[i], where + ".coefficients[" + std::to_string(i) + "]"));
    }
    return d;
}

inline Json to_json(const VPolytope &p)
{
    Json j;
    j["rank"] = p.rank;
    Json vs = Json::array();
    for (const auto &v : p.vertices) {
        vs.push_back(to_json(v));
    }
    j["vertices"] = std::move(vs);
    return j;
}

inline VPolytope polytope_from_json(const Json &j, const std::string &where = "polytope")
{
    const Json &rank = field(j, "rank", where);
    if (!rank.is_number_unsigned()) {
        throw parse_error(where + ": rank must be a nonnegative integer");
    }
    VPolytope p;
    p.rank = rank.get<std::size_t>();
    const Json &vs = array_field(j, "vertices", where);
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string w = where + ".vertices[" + std::to_string(i) + "]";
        if (!vs[i].is_array() || vs[i].size() != p.rank) {
            throw parse_error(w + ": expected " + std::to_string(p.rank) + " coordinates");
        }
        RationalVector v;
        for (const auto &x : vs[i]) {
            v.push_back(rational_from_json(x, w));
        }
        pts.push_back(std::move(v));
    }
    p.vertices = extreme_points(std::move(pts), p.rank);
    return p;
}

inline Json parse_document(const std::string &text, const std::string &where)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw parse_error(where + ": invalid JSON (" + e.what() + ")");
    }
}

} // namespace fibertoric::json

#endif
