#pragma once

#include <optional>
#include <string>

#include "fracivp/expr.hpp"

namespace fracivp::problem {

/// The initial value problem D^sigma w = f(x, w, D^{sigma-1}w), w(0) = 0,
/// D^{sigma-1}w(0) = b, described through the regular part
/// g(x, w, v) = x^{sigma-1} f(x, w, v), which stays continuous at the origin.
struct ProblemSpec {
    double sigma = 1.5;  // in (1,2)
    double b = 1.0;      // second initial value, nonzero
    double T = 1.0;      // declared horizon
    expr::Expr g;        // regular part, variables (x, w, v)
    double r1 = 1.0;     // box radius around 0 for w
    double r2 = 1.0;     // box radius around b for v
    std::optional<double> M;  // declared sup bound of |g| on the box

    void validate() const;  // throws ValidationError naming the field
    double total_radius() const { return r1 + r2; }
};

/// Certified horizon with the branch bookkeeping that produced it.
struct ExistenceWindow {
    double T0;             // min(T, (r/C)^{1/alpha})
    double alpha;          // one of sigma-1, 1, 2-sigma
    double C;              // the constant C(b, sigma, M)
    std::string case_tag;  // which branch fired
    bool truncated_by_T;   // true when T was the binding constraint
};

/// Sup bound of |g| over a density^3 lattice on [0,T] x [-r1,r1] x [b-r2,b+r2],
/// inflated by the safety factor 1.1. A declared M passes through unchanged.
double bound_M(const ProblemSpec& spec, int density = 24);

/// C(b, sigma, M) = |b|/Gamma(sigma) + M (1 + Gamma(3-sigma)) / (2-sigma).
double existence_constant(double b, double sigma, double M);

/// Certified existence horizon: alpha = 1 when r/C >= 1, otherwise sigma-1
/// for sigma <= 1.5 and 2-sigma for sigma >= 1.5; T0 = min(T, (r/C)^{1/alpha}).
ExistenceWindow existence_window(const ProblemSpec& spec);

}  // namespace fracivp::problem
