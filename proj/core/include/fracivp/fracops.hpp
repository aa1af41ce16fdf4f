#pragma once

#include <vector>

namespace fracivp::fracops {

/// Uniform mesh 0 = x_0 < x_1 < ... < x_n = endpoint.
struct Grid {
    double endpoint = 1.0;
    int n = 1;  // number of subintervals

    double spacing() const { return endpoint / n; }
    double point(int i) const { return endpoint * i / n; }
    int size() const { return n + 1; }
    std::vector<double> points() const;
    bool operator==(const Grid&) const = default;
};

/// Samples of a function on a grid together with its declared behavior
/// value(x) ~ c x^{leading_exponent} near the origin; the regular part
/// value(x) / x^{leading_exponent} is what gets interpolated.
struct SampledFunction {
    Grid grid;
    std::vector<double> values;
    double leading_exponent = 0.0;

    void validate() const;  // throws DomainError on invariant violation
    bool is_zero() const;
};

/// Riemann-Liouville integral I^sigma u on u's grid, sigma in (0,2).
/// Each point integral is mapped to [0,1] and handled by a Gauss-Jacobi rule
/// whose weight absorbs both the kernel and the leading power of u.
SampledFunction frac_integral(double sigma, const SampledFunction& u,
                              int quad_points = 40);

/// D^{sigma-1} u for sigma in (1,2): first derivative of I^{2-sigma} u,
/// centered differences on the smooth intermediate (one-sided at the ends).
/// Throws DomainError when the declared leading exponent makes the result
/// unbounded at the origin.
SampledFunction frac_derivative_minus_one(double sigma, const SampledFunction& u,
                                          int quad_points = 40);

/// D^sigma u for sigma in (1,2): second derivative of I^{2-sigma} u.
/// Lower accuracy than frac_derivative_minus_one; diagnostic use only,
/// endpoints are extrapolated from the interior.
SampledFunction frac_derivative(double sigma, const SampledFunction& u,
                                int quad_points = 40);

/// Max-norm defect over the grid interior of the two composition identities
///   I^sigma D^sigma u = u - d_init x^{sigma-1}/Gamma(sigma)
///   D^sigma I^sigma u = u
/// where d_init is the known value of D^{sigma-1}u at 0.
double check_composition(double sigma, const SampledFunction& u, double d_init,
                         int quad_points = 40);

}  // namespace fracivp::fracops
