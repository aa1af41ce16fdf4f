#pragma once

// Shared test-only oracles, independent of the library implementation paths
// they are used to check.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace testsupport {

// plain adaptive Simpson; callers handle endpoint singularities themselves
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-13, int depth = 60) {
    std::function<double(double, double, double, double, double, double, int)> rec =
        [&](double a_, double b_, double fa, double fb, double fc, double whole,
            int d) -> double {
        const double c = 0.5 * (a_ + b_);
        const double lm = 0.5 * (a_ + c), rm = 0.5 * (c + b_);
        const double flm = f(lm), frm = f(rm);
        const double left = (c - a_) / 6.0 * (fa + 4.0 * flm + fc);
        const double right = (b_ - c) / 6.0 * (fc + 4.0 * frm + fb);
        if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol)
            return left + right + (left + right - whole) / 15.0;
        return rec(a_, c, fa, fc, flm, left, d - 1) + rec(c, b_, fc, fb, frm, right, d - 1);
    };
    const double c = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fc = f(c);
    return rec(a, b, fa, fb, fc, (b - a) / 6.0 * (fa + 4.0 * fc + fb), depth);
}

// int_0^1 tau^a (1-tau)^b h(tau) dtau with the endpoint powers absorbed by the
// exact substitutions u = tau^{1+a} and u = (1-tau)^{1+b}
inline double weighted_moment_oracle(double a, double b,
                                     const std::function<double(double)>& h,
                                     double tol = 1e-13) {
    const double split = 0.5;
    const auto left = [&](double u) {
        const double tau = std::pow(u, 1.0 / (1.0 + a));
        return std::pow(1.0 - tau, b) * h(tau);
    };
    const auto right = [&](double u) {
        const double tau = 1.0 - std::pow(u, 1.0 / (1.0 + b));
        return std::pow(tau, a) * h(tau);
    };
    return adaptive_simpson(left, 0.0, std::pow(split, 1.0 + a), tol) / (1.0 + a) +
           adaptive_simpson(right, 0.0, std::pow(1.0 - split, 1.0 + b), tol) /
               (1.0 + b);
}

// brute-force Mittag-Leffler partial sum in extended precision
inline long double mittag_leffler_series(long double alpha, long double beta,
                                         long double z, int terms = 300) {
    long double sum = 0.0L;
    for (int k = 0; k < terms; ++k)
        sum += std::pow(z, static_cast<long double>(k)) /
               std::tgammal(alpha * k + beta);
    return sum;
}

}  // namespace testsupport
