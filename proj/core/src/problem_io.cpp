#include "fracivp/problem_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "fracivp/errors.hpp"

namespace fracivp::io {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& field) {
    if (!j.contains(field)) throw ValidationError(field, "missing required number");
    if (!j.at(field).is_number()) throw ValidationError(field, "must be a number");
    return j.at(field).get<double>();
}

std::optional<double> optional_number(const json& j, const std::string& field) {
    if (!j.contains(field)) return std::nullopt;
    if (!j.at(field).is_number()) throw ValidationError(field, "must be a number");
    return j.at(field).get<double>();
}

std::string require_string(const json& j, const std::string& field) {
    if (!j.contains(field)) throw ValidationError(field, "missing required string");
    if (!j.at(field).is_string()) throw ValidationError(field, "must be a string");
    return j.at(field).get<std::string>();
}

}  // namespace

ProblemFile load_problem(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("<document>", e.what());
    }
    if (!doc.is_object()) throw ValidationError("<document>", "must be a JSON object");

    ProblemFile pf;
    pf.spec.sigma = require_number(doc, "sigma");
    pf.spec.b = require_number(doc, "b");
    pf.spec.T = require_number(doc, "T");
    pf.spec.r1 = require_number(doc, "r1");
    pf.spec.r2 = require_number(doc, "r2");
    pf.spec.M = optional_number(doc, "M");
    pf.spec.g = expr::parse(require_string(doc, "g"));
    pf.spec.validate();

    if (doc.contains("solver")) {
        const json& s = doc.at("solver");
        if (!s.is_object()) throw ValidationError("solver", "must be a table");
        if (auto v = optional_number(s, "n")) pf.solver.n = static_cast<int>(*v);
        if (auto v = optional_number(s, "quad_points"))
            pf.solver.quad_points = static_cast<int>(*v);
        if (auto v = optional_number(s, "tol")) pf.solver.tol = *v;
        if (auto v = optional_number(s, "max_iter"))
            pf.solver.max_iter = static_cast<int>(*v);
        pf.solver.X = optional_number(s, "X");
        pf.solver.validate();
    }

    if (doc.contains("certificates")) {
        const json& c = doc.at("certificates");
        if (!c.is_object()) throw ValidationError("certificates", "must be a table");
        auto& cp = pf.certificates;
        cp.L = optional_number(c, "L");
        cp.C = optional_number(c, "C");
        cp.alpha = optional_number(c, "alpha");
        cp.p = optional_number(c, "p");
        if (c.contains("modulus")) cp.modulus = require_string(c, "modulus");
        if (auto v = optional_number(c, "samples")) cp.samples = static_cast<int>(*v);
        if (auto v = optional_number(c, "seed"))
            cp.seed = static_cast<std::uint64_t>(*v);
        if (auto v = optional_number(c, "gamma")) cp.gamma_upper = *v;
        if (c.contains("eps")) {
            if (!c.at("eps").is_array())
                throw ValidationError("certificates.eps", "must be an array of numbers");
            cp.eps.clear();
            for (const auto& e : c.at("eps")) {
                if (!e.is_number())
                    throw ValidationError("certificates.eps", "must be an array of numbers");
                cp.eps.push_back(e.get<double>());
            }
        }
        if (cp.samples < 1)
            throw ValidationError("certificates.samples", "must be >= 1");
    }
    return pf;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("<file>", "cannot open '" + path + "'");
    return load_problem(in);
}

}  // namespace fracivp::io
