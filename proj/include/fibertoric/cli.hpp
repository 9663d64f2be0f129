#ifndef FIBERTORIC_CLI_HPP
#define FIBERTORIC_CLI_HPP

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohomology.hpp"
#include "equivariant.hpp"
#include "fan.hpp"
#include "json_io.hpp"
#include "polytope.hpp"
#include "twist.hpp"

// Command-line driver. Every command writes one JSON document; exit codes are
// 0 = success, 1 = validation failure (report still written), 2 = malformed input.

namespace fibertoric::cli
{

using json::Json;

enum ExitCode : int { ok = 0, validation_failure = 1, malformed_input = 2 };

namespace detail
{

inline Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw json::parse_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return json::parse_document(ss.str(), path);
}

inline Json to_json(const std::vector<std::size_t> &v)
{
    Json a = Json::array();
    for (auto x : v) {
        a.push_back(x);
    }
    return a;
}

inline Json to_json(const std::vector<Integer> &v)
{
    Json a = Json::array();
    for (const auto &x : v) {
        a.push_back(json::to_json(x));
    }
    return a;
}

inline Json error_report(const std::string &message)
{
    Json j;
    j["error"] = message;
    return j;
}

inline Json validation_json(const ValidationReport &rep, const Fan &fan)
{
    Json j;
    j["f_vector"] = rep.is_valid ? to_json(enumerate_faces(fan).f_vector) : Json::array();
    j["is_complete"] = rep.is_complete;
    j["is_smooth"] = rep.is_smooth;
    j["is_valid"] = rep.is_valid;
    Json v = Json::array();
    for (const auto &s : rep.violations) {
        v.push_back(s);
    }
    j["violations"] = std::move(v);
    return j;
}

/// Returns a report for fans that cannot enter smooth-complete computations, or nullopt if fine.
inline std::optional<Json> smooth_complete_problem(const Fan &fan)
{
    const auto rep = fan_validate(fan);
    if (rep.is_valid && rep.is_smooth && rep.is_complete) {
        return std::nullopt;
    }
    Json j = error_report("fan must be valid, smooth and complete");
    j["validation"] = validation_json(rep, fan);
    return j;
}

inline std::vector<std::string> ray_names(const Fan &fan)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

inline Json class_json(const RingClass &c, const std::vector<std::string> &names)
{
    Json j;
    Json basis = Json::array();
    for (const auto &m : c.ring->basis(c.degree).basis_monomials) {
        basis.push_back(monomial_string(m, names));
    }
    j["basis"] = std::move(basis);
    Json coeffs = Json::array();
    for (const auto &q : c.coefficients) {
        coeffs.push_back(json::rational_string(q));
    }
    j["coefficients"] = std::move(coeffs);
    j["degree"] = c.degree;
    return j;
}

struct Outcome {
    Json document;
    int code = ok;
};

inline Outcome cmd_validate(const std::string &fan_path)
{
    const Fan fan = json::fan_from_json(read_json_file(fan_path), fan_path);
    const auto rep = fan_validate(fan);
    return {validation_json(rep, fan), rep.is_valid ? ok : validation_failure};
}

inline Outcome cmd_twist(const std::string &twist_path)
{
    const TwistData t = json::twist_from_json(read_json_file(twist_path), twist_path);
    for (const auto *part : {&t.base, &t.fiber}) {
        const auto rep = fan_validate(*part);
        if (!rep.is_valid) {
            Json j = error_report(std::string(part == &t.base ? "base" : "fiber") + " fan is invalid");
            j["validation"] = validation_json(rep, *part);
            return {j, validation_failure};
        }
    }
    return {json::to_json(twisted_product(t)), ok};
}

inline Outcome cmd_split(const std::string &fan_path, const std::vector<std::size_t> &base_coords)
{
    const Fan fan = json::fan_from_json(read_json_file(fan_path), fan_path);
    const auto rep = fan_validate(fan);
    if (!rep.is_valid) {
        Json j = error_report("input fan is invalid");
        j["validation"] = validation_json(rep, fan);
        return {j, validation_failure};
    }
    const auto split = detect_fibered(fan, base_coords);
    if (!split) {
        Json j;
        j["reason"] = split.reason;
        j["success"] = false;
        return {j, validation_failure};
    }
    return {json::to_json(*split.data), ok};
}

inline Outcome cmd_betti(const std::string &fan_path)
{
    const Fan fan = json::fan_from_json(read_json_file(fan_path), fan_path);
    if (auto problem = smooth_complete_problem(fan)) {
        return {*problem, validation_failure};
    }
    const CohomologyRing h(fan);
    const auto chern = total_chern(h);
    Json j;
    j["betti"] = to_json(h.betti_numbers());
    Json cd;
    RingClass c1_power = h.unit();
    for (unsigned i = 0; i < h.rank(); ++i) {
        c1_power = multiply(c1_power, chern.size() > 1 ? chern[1] : h.unit());
    }
    cd["c1_power"] = json::rational_string(h.degree(c1_power));
    cd["c_top"] = json::rational_string(h.degree(chern.back()));
    j["chern_degrees"] = std::move(cd);
    j["euler_characteristic"] = json::to_json(euler_characteristic(h));
    j["f_vector"] = to_json(enumerate_faces(fan).f_vector);
    j["h_vector"] = to_json(h_vector(fan));
    // Poincare pairing between H^2 and H^{2(rank-1)} in the reduced bases
    Json pairing = Json::array();
    if (h.rank() >= 1) {
        const auto &low = h.ring()->basis(1);
        const auto &high = h.ring()->basis(h.rank() - 1);
        for (const auto &a : low.basis_monomials) {
            Json row = Json::array();
            for (const auto &b : high.basis_monomials) {
                row.push_back(json::rational_string(
                    h.degree(multiply(h.monomial_class(a), h.monomial_class(b)))));
            }
            pairing.push_back(std::move(row));
        }
    }
    j["intersection_matrix"] = std::move(pairing);
    return {j, ok};
}

inline Outcome cmd_intersect(const std::string &fan_path, const std::vector<std::string> &divisor_paths)
{
    const Fan fan = json::fan_from_json(read_json_file(fan_path), fan_path);
    std::vector<Divisor> divisors;
    for (const auto &p : divisor_paths) {
        divisors.push_back(json::divisor_from_json(read_json_file(p), p));
        if (divisors.back().coefficients.size() != fan.rays.size()) {
            throw json::parse_error(p + ": divisor needs " + std::to_string(fan.rays.size())
                                    + " coefficients");
        }
    }
    if (divisors.size() != fan.rank) {
        throw json::parse_error("intersect takes exactly " + std::to_string(fan.rank)
                                + " divisor files, got " + std::to_string(divisors.size()));
    }
    if (auto problem = smooth_complete_problem(fan)) {
        return {*problem, validation_failure};
    }
    Json j;
    j["intersection_number"] = json::rational_string(intersection_number(fan, divisors));
    return {j, ok};
}

inline Outcome cmd_bkk_check(const std::string &twist_path, const std::string &fiber_path,
                             const std::string &base_path)
{
    const TwistData t = json::twist_from_json(read_json_file(twist_path), twist_path);
    const Divisor fiber = json::divisor_from_json(read_json_file(fiber_path), fiber_path);
    const Divisor base = json::divisor_from_json(read_json_file(base_path), base_path);
    if (fiber.coefficients.size() != t.fiber.rays.size()) {
        throw json::parse_error(fiber_path + ": fiber divisor needs " + std::to_string(t.fiber.rays.size())
                                + " coefficients");
    }
    if (base.coefficients.size() != t.base.rays.size()) {
        throw json::parse_error(base_path + ": base divisor needs " + std::to_string(t.base.rays.size())
                                + " coefficients");
    }
    for (const auto *part : {&t.base, &t.fiber}) {
        if (auto problem = smooth_complete_problem(*part)) {
            return {*problem, validation_failure};
        }
    }
    const auto rep = bkk_check(t, fiber, base);
    Json j;
    j["equal"] = rep.equal;
    j["lhs"] = json::rational_string(rep.lhs);
    Json pi;
    pi["computed"] = rep.proof_identity.computed;
    if (rep.proof_identity.computed) {
        pi["equal"] = rep.proof_identity.equal;
        pi["fiberwise_integral"] = json::rational_string(rep.proof_identity.fiberwise_integral);
        pi["total_volume"] = json::rational_string(rep.proof_identity.total_volume);
    } else {
        pi["reason"] = rep.proof_identity.skipped_reason;
    }
    j["proof_identity"] = std::move(pi);
    j["rhs"] = json::rational_string(rep.rhs);
    const bool good = rep.equal && (!rep.proof_identity.computed || rep.proof_identity.equal);
    return {j, good ? ok : validation_failure};
}

inline Outcome cmd_chern(const std::string &fan_path)
{
    const Fan fan = json::fan_from_json(read_json_file(fan_path), fan_path);
    if (auto problem = smooth_complete_problem(fan)) {
        return {*problem, validation_failure};
    }
    const CohomologyRing h(fan);
    const auto chern = total_chern(h);
    const auto names = ray_names(fan);
    Json j;
    RingClass c1_power = h.unit();
    for (unsigned i = 0; i < h.rank(); ++i) {
        c1_power = multiply(c1_power, chern.size() > 1 ? chern[1] : h.unit());
    }
    j["c1_power_degree"] = json::rational_string(h.degree(c1_power));
    j["c_top_degree"] = json::rational_string(h.degree(chern.back()));
    Json classes = Json::array();
    for (const auto &c : chern) {
        classes.push_back(class_json(c, names));
    }
    j["classes"] = std::move(classes);
    j["euler_characteristic"] = json::to_json(euler_characteristic(h));
    j["maximal_cones"] = fan.maximal_cones.size();
    return {j, ok};
}

inline Outcome cmd_equivariant(const std::string &fan_path, long m, std::optional<long> max_degree)
{
    const Fan fan = json::fan_from_json(read_json_file(fan_path), fan_path);
    if (m < 0) {
        throw json::parse_error("--m must be nonnegative");
    }
    if (max_degree && *max_degree < 0) {
        throw json::parse_error("--max-degree must be nonnegative");
    }
    if (auto problem = smooth_complete_problem(fan)) {
        return {*problem, validation_failure};
    }
    const auto rep = equivariant_consistency_check(fan, static_cast<std::size_t>(m));
    HilbertCoefficients truncated = rep.truncated_dims;
    HilbertCoefficients sr = rep.sr_coeffs;
    if (max_degree) {
        const auto d = static_cast<std::size_t>(*max_degree);
        truncated = truncated_quotient_dims(fan, static_cast<std::size_t>(m), d);
        sr = sr_hilbert_coeffs(fan, d);
    }
    Json j;
    HilbertCoefficients borel = rep.borel_betti;
    borel.pop_back(); // drop the vanishing degree above the top
    j["borel_betti"] = to_json(borel);
    j["consistent"] = rep.consistent;
    j["m"] = m;
    j["sr_coeffs"] = to_json(sr);
    j["truncated_dims"] = to_json(truncated);
    return {j, rep.consistent ? ok : validation_failure};
}

inline std::vector<std::size_t> parse_index_list(const std::string &s)
{
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw json::parse_error("--base-coords: expected comma-separated indices, got \"" + s + "\"");
        }
        out.push_back(std::stoul(item));
    }
    return out;
}

} // namespace detail

/// Runs one CLI invocation; JSON goes to `out` (or the -o file), diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact computations on fibered toric varieties", "fibertoric"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output_path;
    app.add_option("-o,--output", output_path, "write the JSON report to this file");

    std::string fan_path, twist_path, fiber_path, base_path, base_coords;
    std::vector<std::string> divisor_paths;
    long m = 0;
    std::optional<long> max_degree;

    auto *validate = app.add_subcommand("validate", "check a fan: validity, smoothness, completeness");
    validate->add_option("fan", fan_path)->required();
    auto *twist = app.add_subcommand("twist", "twisted product of the fans in a twist file");
    twist->add_option("twist", twist_path)->required();
    auto *split = app.add_subcommand("split", "recover twist data from a fan");
    split->add_option("fan", fan_path)->required();
    split->add_option("--base-coords", base_coords, "comma-separated base coordinate indices")->required();
    auto *betti = app.add_subcommand("betti", "Betti numbers, h-vector and ring report");
    betti->add_option("fan", fan_path)->required();
    auto *intersect = app.add_subcommand("intersect", "intersection number of rank-many divisors");
    intersect->add_option("fan", fan_path)->required();
    intersect->add_option("--divisors", divisor_paths, "divisor files")->delimiter(',')->required();
    auto *bkk = app.add_subcommand("bkk-check", "fibered BKK identity, both sides");
    bkk->add_option("twist", twist_path)->required();
    bkk->add_option("fiber_divisor", fiber_path)->required();
    bkk->add_option("base_divisor", base_path)->required();
    auto *chern = app.add_subcommand("chern", "Chern classes of the tangent bundle");
    chern->add_option("fan", fan_path)->required();
    auto *equiv = app.add_subcommand("equivariant", "finite approximations of equivariant cohomology");
    equiv->add_option("fan", fan_path)->required();
    equiv->add_option("--m", m, "approximation level")->required();
    equiv->add_option("--max-degree", max_degree, "truncate reported dimensions at this degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "fibertoric: " << e.what() << "\n";
        return malformed_input;
    }

    detail::Outcome res;
    try {
        if (validate->parsed()) {
            res = detail::cmd_validate(fan_path);
        } else if (twist->parsed()) {
            res = detail::cmd_twist(twist_path);
        } else if (split->parsed()) {
            res = detail::cmd_split(fan_path, detail::parse_index_list(base_coords));
        } else if (betti->parsed()) {
            res = detail::cmd_betti(fan_path);
        } else if (intersect->parsed()) {
            res = detail::cmd_intersect(fan_path, divisor_paths);
        } else if (bkk->parsed()) {
            res = detail::cmd_bkk_check(twist_path, fiber_path, base_path);
        } else if (chern->parsed()) {
            res = detail::cmd_chern(fan_path);
        } else {
            res = detail::cmd_equivariant(fan_path, m, max_degree);
        }
    } catch (const json::parse_error &e) {
        err << "fibertoric: " << e.what() << "\n";
        return malformed_input;
    } catch (const kernel_error &e) {
        res = {detail::error_report(e.what()), validation_failure};
    }

    const std::string text = res.document.dump() + "\n";
    if (output_path.empty()) {
        out << text;
    } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f) {
            err << "fibertoric: cannot write " << output_path << "\n";
            return malformed_input;
        }
        f << text;
    }
    return res.code;
}

} // namespace fibertoric::cli

#endif
