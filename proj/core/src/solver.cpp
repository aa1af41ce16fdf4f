#include "fracivp/solver.hpp"

#include <algorithm>
#include <cmath>

#include "fracivp/errors.hpp"
#include "fracivp/interp.hpp"
#include "fracivp/specfun.hpp"

namespace fracivp::solver {

void SolverConfig::validate() const {
    if (n < 8) throw ValidationError("solver.n", "must be >= 8");
    if (quad_points < 1) throw ValidationError("solver.quad_points", "must be >= 1");
    if (!(tol > 0.0)) throw ValidationError("solver.tol", "must be positive");
    if (max_iter < 1) throw ValidationError("solver.max_iter", "must be >= 1");
    if (X && !(*X > 0.0)) throw ValidationError("solver.X", "must be positive");
}

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct IterateView {
    // regular part w(x)/x^{sigma-1} and v, both continuous at the origin
    interp::Pchip wreg;
    interp::Pchip v;
    double sigma;

    double w_at(double t) const { return wreg(t) * std::pow(t, sigma - 1.0); }
    double v_at(double t) const { return v(t); }
};

IterateView make_view(const problem::ProblemSpec& spec, const fracops::Grid& grid,
                      const std::vector<double>& w, const std::vector<double>& v) {
    const std::vector<double> knots = grid.points();
    std::vector<double> wreg(knots.size());
    // regular part at 0 is b/Gamma(sigma) for any iterate meeting the
    // initial conditions
    wreg[0] = spec.b / specfun::gamma(spec.sigma);
    for (int i = 1; i <= grid.n; ++i)
        wreg[i] = w[i] / std::pow(knots[i], spec.sigma - 1.0);
    return IterateView{interp::Pchip(knots, wreg), interp::Pchip(knots, v), spec.sigma};
}

// right-hand sides of the coupled integral system at one grid point
std::pair<double, double> apply_operator(const problem::ProblemSpec& spec,
                                         const specfun::QuadratureRule& rule_w,
                                         const specfun::QuadratureRule& rule_v,
                                         const IterateView& it, double x) {
    const double gs = specfun::gamma(spec.sigma);
    const auto g_at = [&](double tau) {
        const double t = x * tau;
        return expr::eval_xwv(spec.g, t, it.w_at(t), it.v_at(t));
    };
    const double qw = rule_w.integrate(g_at);
    const double qv = rule_v.integrate(g_at);
    const double w = spec.b * std::pow(x, spec.sigma - 1.0) / gs + x / gs * qw;
    const double v = spec.b + std::pow(x, 2.0 - spec.sigma) * qv;
    return {w, v};
}

}  // namespace

SolutionPair picard_solve(const problem::ProblemSpec& spec, const SolverConfig& config,
                          const std::optional<InitialIterate>& start) {
    spec.validate();
    config.validate();

    const auto win = problem::existence_window(spec);
    const double X = config.X ? std::min(*config.X, win.T0) : win.T0;

    SolutionPair sol;
    sol.grid = fracops::Grid{X, config.n};
    const std::vector<double> knots = sol.grid.points();
    const double gs = specfun::gamma(spec.sigma);

    sol.w.resize(knots.size());
    sol.v.resize(knots.size());
    for (int i = 0; i <= config.n; ++i) {
        if (start) {
            sol.w[i] = start->w(knots[i]);
            sol.v[i] = start->v(knots[i]);
        } else {
            sol.w[i] = spec.b * std::pow(knots[i], spec.sigma - 1.0) / gs;
            sol.v[i] = spec.b;
        }
    }
    sol.w[0] = 0.0;  // initial conditions hold exactly by construction
    sol.v[0] = spec.b;

    const auto rule_w =
        specfun::gauss_jacobi_rule(1.0 - spec.sigma, spec.sigma - 1.0, config.quad_points);
    const auto rule_v =
        specfun::gauss_jacobi_rule(1.0 - spec.sigma, 0.0, config.quad_points);

    std::vector<double> next_w(knots.size()), next_v(knots.size());
    bool converged = false;
    for (int iter = 1; iter <= config.max_iter; ++iter) {
        const IterateView view = make_view(spec, sol.grid, sol.w, sol.v);
        next_w[0] = 0.0;
        next_v[0] = spec.b;
        for (int i = 1; i <= config.n; ++i) {
            const auto [w, v] = apply_operator(spec, rule_w, rule_v, view, knots[i]);
            next_w[i] = w;
            next_v[i] = v;
        }
        const double norm = max_abs_diff(sol.w, next_w) + max_abs_diff(sol.v, next_v);
        sol.w = next_w;
        sol.v = next_v;
        sol.iterations = iter;
        sol.final_update_norm = norm;
        sol.update_norms.push_back(norm);
        if (norm < config.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError(sol.iterations, sol.final_update_norm);

    for (int i = 0; i <= config.n; ++i) {
        if (std::abs(sol.w[i]) > spec.r1 || std::abs(sol.v[i] - spec.b) > spec.r2) {
            sol.box_escape = true;
            break;
        }
    }
    return sol;
}

std::pair<double, double> residual(const problem::ProblemSpec& spec,
                                   const SolutionPair& sol, int quad_points) {
    spec.validate();
    const auto rule_w =
        specfun::gauss_jacobi_rule(1.0 - spec.sigma, spec.sigma - 1.0, quad_points);
    const auto rule_v = specfun::gauss_jacobi_rule(1.0 - spec.sigma, 0.0, quad_points);
    const IterateView view = make_view(spec, sol.grid, sol.w, sol.v);

    double res_w = 0.0, res_v = 0.0;
    for (int i = 1; i <= sol.grid.n; ++i) {
        const double x = sol.grid.point(i);
        const auto [w, v] = apply_operator(spec, rule_w, rule_v, view, x);
        res_w = std::max(res_w, std::abs(sol.w[i] - w));
        res_v = std::max(res_v, std::abs(sol.v[i] - v));
    }
    return {res_w, res_v};
}

std::vector<RefineRow> refine_study(const problem::ProblemSpec& spec,
                                    const std::vector<int>& ns,
                                    const expr::Expr& oracle_w,
                                    const expr::Expr& oracle_v, SolverConfig config) {
    constexpr double kNoiseFloor = 1e-13;
    std::vector<RefineRow> rows;
    for (int n : ns) {
        config.n = n;
        const SolutionPair sol = picard_solve(spec, config);
        double err_w = 0.0, err_v = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double x = sol.grid.point(i);
            const double xv[1] = {x};
            err_w = std::max(err_w, std::abs(sol.w[i] - oracle_w.eval(xv)));
            err_v = std::max(err_v, std::abs(sol.v[i] - oracle_v.eval(xv)));
        }
        RefineRow row{n, err_w, err_v, std::nan(""), std::nan("")};
        if (!rows.empty()) {
            const RefineRow& prev = rows.back();
            const double denom = std::log(double(n) / prev.n);
            if (prev.err_w > kNoiseFloor && err_w > kNoiseFloor)
                row.order_w = std::log(prev.err_w / err_w) / denom;
            if (prev.err_v > kNoiseFloor && err_v > kNoiseFloor)
                row.order_v = std::log(prev.err_v / err_v) / denom;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace fracivp::solver
