#include "fracivp/fracops.hpp"

#include <algorithm>
#include <cmath>

#include "fracivp/errors.hpp"
#include "fracivp/interp.hpp"
#include "fracivp/specfun.hpp"

namespace fracivp::fracops {

std::vector<double> Grid::points() const {
    std::vector<double> p(size());
    for (int i = 0; i <= n; ++i) p[i] = point(i);
    return p;
}

void SampledFunction::validate() const {
    if (grid.endpoint <= 0.0) throw DomainError("grid endpoint must be positive");
    if (grid.n < 1) throw DomainError("grid must have at least one subinterval");
    if (static_cast<int>(values.size()) != grid.size())
        throw DomainError("sample count does not match grid size");
    if (leading_exponent < 0.0) throw DomainError("leading exponent must be >= 0");
    if (leading_exponent > 0.0 && values[0] != 0.0)
        throw DomainError("leading exponent > 0 requires value 0 at the origin");
}

bool SampledFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
}

namespace {

constexpr double kExponentSlack = 1e-10;

// samples of values[i] / x_i^gamma; the origin value is extrapolated
std::vector<double> regular_part(const SampledFunction& u) {
    const double gamma = u.leading_exponent;
    if (gamma == 0.0) return u.values;
    const int n = u.grid.n;
    std::vector<double> reg(n + 1);
    for (int i = 1; i <= n; ++i) reg[i] = u.values[i] / std::pow(u.grid.point(i), gamma);
    if (n >= 3)
        reg[0] = 3.0 * reg[1] - 3.0 * reg[2] + reg[3];
    else if (n == 2)
        reg[0] = 2.0 * reg[1] - reg[2];
    else
        reg[0] = reg[1];
    return reg;
}

SampledFunction zero_like(const Grid& g) {
    return SampledFunction{g, std::vector<double>(g.size(), 0.0), 0.0};
}

void require_sigma(double sigma, double lo, double hi, const char* who) {
    if (!(sigma > lo && sigma < hi))
        throw DomainError(std::string(who) + ": order out of range");
}

void require_regularity(double sigma, const SampledFunction& u) {
    if (u.leading_exponent < sigma - 1.0 - kExponentSlack && !u.is_zero())
        throw DomainError(
            "insufficient regularity: leading exponent below sigma-1 makes the "
            "fractional derivative unbounded at the origin");
}

// intermediate I^{2-sigma} u and its finite-difference first derivative
std::vector<double> derivative_of_intermediate(double sigma, const SampledFunction& u,
                                               int quad_points) {
    const SampledFunction s = frac_integral(2.0 - sigma, u, quad_points);
    const int n = u.grid.n;
    const double h = u.grid.spacing();
    std::vector<double> d(n + 1);
    d[0] = (-3.0 * s.values[0] + 4.0 * s.values[1] - s.values[2]) / (2.0 * h);
    for (int i = 1; i < n; ++i) d[i] = (s.values[i + 1] - s.values[i - 1]) / (2.0 * h);
    d[n] = (3.0 * s.values[n] - 4.0 * s.values[n - 1] + s.values[n - 2]) / (2.0 * h);
    return d;
}

}  // namespace

SampledFunction frac_integral(double sigma, const SampledFunction& u, int quad_points) {
    require_sigma(sigma, 0.0, 2.0, "frac_integral");
    u.validate();
    if (u.is_zero()) return zero_like(u.grid);

    const double gamma = u.leading_exponent;
    const auto rule = specfun::gauss_jacobi_rule(gamma, sigma - 1.0, quad_points);
    const double inv_gamma_sigma = 1.0 / specfun::gamma(sigma);

    const std::vector<double> knots = u.grid.points();
    const interp::Pchip reg(knots, regular_part(u));

    SampledFunction out;
    out.grid = u.grid;
    out.leading_exponent = sigma + gamma;
    out.values.assign(u.grid.size(), 0.0);
    for (int i = 1; i <= u.grid.n; ++i) {
        const double x = knots[i];
        const double q = rule.integrate([&](double tau) { return reg(x * tau); });
        out.values[i] = std::pow(x, sigma + gamma) * inv_gamma_sigma * q;
    }
    return out;
}

SampledFunction frac_derivative_minus_one(double sigma, const SampledFunction& u,
                                          int quad_points) {
    require_sigma(sigma, 1.0, 2.0, "frac_derivative_minus_one");
    u.validate();
    if (u.is_zero()) return zero_like(u.grid);
    require_regularity(sigma, u);

    SampledFunction out;
    out.grid = u.grid;
    out.values = derivative_of_intermediate(sigma, u, quad_points);
    const double e = u.leading_exponent - (sigma - 1.0);
    if (e > kExponentSlack) {
        out.leading_exponent = e;
        out.values[0] = 0.0;
    }
    return out;
}

SampledFunction frac_derivative(double sigma, const SampledFunction& u, int quad_points) {
    require_sigma(sigma, 1.0, 2.0, "frac_derivative");
    u.validate();
    if (u.is_zero()) return zero_like(u.grid);
    require_regularity(sigma, u);

    const SampledFunction s = frac_integral(2.0 - sigma, u, quad_points);
    const int n = u.grid.n;
    const double h = u.grid.spacing();
    SampledFunction out;
    out.grid = u.grid;
    out.values.assign(n + 1, 0.0);
    for (int i = 1; i < n; ++i)
        out.values[i] = (s.values[i + 1] - 2.0 * s.values[i] + s.values[i - 1]) / (h * h);
    out.values[0] = 2.0 * out.values[1] - out.values[2];
    out.values[n] = 2.0 * out.values[n - 1] - out.values[n - 2];
    return out;
}

double check_composition(double sigma, const SampledFunction& u, double d_init,
                         int quad_points) {
    require_sigma(sigma, 1.0, 2.0, "check_composition");
    u.validate();

    const double g_sigma = specfun::gamma(sigma);
    const SampledFunction du = frac_derivative(sigma, u, quad_points);
    const SampledFunction i_du = frac_integral(sigma, du, quad_points);
    const SampledFunction i_u = frac_integral(sigma, u, quad_points);
    const SampledFunction d_iu = frac_derivative(sigma, i_u, quad_points);

    double defect = 0.0;
    for (int i = 1; i < u.grid.n; ++i) {
        const double x = u.grid.point(i);
        const double target = u.values[i] - d_init * std::pow(x, sigma - 1.0) / g_sigma;
        defect = std::max(defect, std::abs(i_du.values[i] - target));
        defect = std::max(defect, std::abs(d_iu.values[i] - u.values[i]));
    }
    return defect;
}

}  // namespace fracivp::fracops
