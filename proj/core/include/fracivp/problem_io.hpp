#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracivp/problem.hpp"
#include "fracivp/solver.hpp"

namespace fracivp::io {

/// Optional certificate parameters from the problem file's "certificates" table.
struct CertificateParams {
    std::optional<double> L, C, alpha, p;
    std::optional<std::string> modulus;  // expression in the single variable u
    int samples = 2000;
    std::uint64_t seed = 0;
    double gamma_upper = 1.0;
    std::vector<double> eps = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
};

struct ProblemFile {
    problem::ProblemSpec spec;
    solver::SolverConfig solver;
    CertificateParams certificates;
};

/// Parse one JSON problem document. Throws ValidationError naming the field
/// on schema or invariant violations, ParseError on a malformed g expression.
ProblemFile load_problem(std::istream& in);
ProblemFile load_problem_file(const std::string& path);

}  // namespace fracivp::io
