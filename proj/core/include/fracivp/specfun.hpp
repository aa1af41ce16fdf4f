#pragma once

#include <vector>

namespace fracivp::specfun {

/// Gamma function. Throws DomainError at the poles (x = 0, -1, -2, ...).
/// Relative error below 1e-13 on [0.1, 50].
double gamma(double x);

/// log Gamma for x > 0.
double log_gamma(double x);

/// Euler beta B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0.
double beta(double a, double b);

struct MittagLefflerOptions {
    double z_budget = 50.0;   // |z| beyond this is rejected up front
    int max_terms = 10000;
    double abs_tol = 1e-12;
};

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) for real z,
/// summed as sum_k z^k / Gamma(alpha k + beta) with a rigorous tail bound.
/// Throws BudgetError if the tail bound cannot be met within max_terms.
double mittag_leffler(double alpha, double beta, double z,
                      const MittagLefflerOptions& opts = {});

/// n-point rule for integrals  int_0^1 tau^a (1-tau)^b phi(tau) dtau,
/// exact for phi polynomial of degree <= 2n-1.
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing, in (0,1)
    std::vector<double> weights;  // all positive
    double exponent_left;         // a, power of tau
    double exponent_right;        // b, power of (1-tau)

    double total_mass() const;  // sum of weights

    template <typename F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// Gauss-Jacobi rule on [0,1] with weight tau^a (1-tau)^b, a, b > -1.
QuadratureRule gauss_jacobi_rule(double exponent_left, double exponent_right, int n);

}  // namespace fracivp::specfun
