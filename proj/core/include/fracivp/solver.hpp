#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fracivp/fracops.hpp"
#include "fracivp/problem.hpp"

namespace fracivp::solver {

struct SolverConfig {
    int n = 512;           // grid subintervals, >= 8
    int quad_points = 32;  // Gauss-Jacobi points per integral
    double tol = 1e-10;    // stop when ||dw||_inf + ||dv||_inf < tol
    int max_iter = 200;
    std::optional<double> X;  // solve endpoint, capped at T0

    void validate() const;
};

/// Optional starting iterate for uniqueness experiments; defaults to the
/// g == 0 solution w0 = b x^{sigma-1}/Gamma(sigma), v0 = b.
struct InitialIterate {
    std::function<double(double)> w;
    std::function<double(double)> v;
};

struct SolutionPair {
    fracops::Grid grid;
    std::vector<double> w;  // omega samples, w[0] = 0
    std::vector<double> v;  // D^{sigma-1} omega samples, v[0] = b
    int iterations = 0;
    double final_update_norm = 0.0;
    std::vector<double> update_norms;  // one entry per sweep
    bool box_escape = false;  // iterates left the Theorem 3.1 box; result
                              // returned anyway, no longer certified
};

/// Picard iteration on the coupled integral system
///   w(x) = b x^{sigma-1}/Gamma(sigma) + (x/Gamma(sigma))
///            int_0^1 tau^{1-sigma}(1-tau)^{sigma-1} g(x tau, w, v) dtau
///   v(x) = b + x^{2-sigma} int_0^1 tau^{1-sigma} g(x tau, w, v) dtau
/// on [0, X] with X capped at the certified horizon T0.
/// Throws ConvergenceError when max_iter is exhausted.
SolutionPair picard_solve(const problem::ProblemSpec& spec, const SolverConfig& config,
                          const std::optional<InitialIterate>& start = std::nullopt);

/// Max-norm defects (w-equation, v-equation) of a candidate solution pair,
/// one quadrature pass with no iteration.
std::pair<double, double> residual(const problem::ProblemSpec& spec,
                                   const SolutionPair& sol, int quad_points = 32);

struct RefineRow {
    int n;
    double err_w, err_v;
    double order_w, order_v;  // NaN on the first row or when errors are at noise level
};

/// Grid-refinement study against closed-form oracles w(x), v(x) given as
/// single-variable expressions in x.
std::vector<RefineRow> refine_study(const problem::ProblemSpec& spec,
                                    const std::vector<int>& ns,
                                    const expr::Expr& oracle_w,
                                    const expr::Expr& oracle_v,
                                    SolverConfig config = {});

}  // namespace fracivp::solver
