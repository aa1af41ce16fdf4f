#include "fracivp/problem.hpp"

#include <algorithm>
#include <cmath>

#include "fracivp/errors.hpp"
#include "fracivp/specfun.hpp"

namespace fracivp::problem {

void ProblemSpec::validate() const {
    if (!(sigma > 1.0 && sigma < 2.0))
        throw ValidationError("sigma", "must lie strictly inside (1,2)");
    if (b == 0.0) throw ValidationError("b", "must be nonzero");
    if (!(T > 0.0)) throw ValidationError("T", "must be positive");
    if (g.empty()) throw ValidationError("g", "missing right-hand side expression");
    if (!(r1 > 0.0)) throw ValidationError("r1", "must be positive");
    if (!(r2 > 0.0)) throw ValidationError("r2", "must be positive");
    if (M && !(*M > 0.0)) throw ValidationError("M", "must be positive when supplied");
}

double bound_M(const ProblemSpec& spec, int density) {
    spec.validate();
    if (spec.M) return *spec.M;
    if (density < 2) throw ValidationError("density", "must be at least 2");

    double best = 0.0;
    for (int i = 0; i < density; ++i) {
        const double x = spec.T * i / (density - 1);
        for (int j = 0; j < density; ++j) {
            const double w = -spec.r1 + 2.0 * spec.r1 * j / (density - 1);
            for (int k = 0; k < density; ++k) {
                const double v = spec.b - spec.r2 + 2.0 * spec.r2 * k / (density - 1);
                best = std::max(best, std::abs(expr::eval_xwv(spec.g, x, w, v)));
            }
        }
    }
    return 1.1 * best;  // safety factor over the lattice maximum
}

double existence_constant(double b, double sigma, double M) {
    if (!(sigma > 1.0 && sigma < 2.0))
        throw ValidationError("sigma", "must lie strictly inside (1,2)");
    if (M < 0.0) throw ValidationError("M", "must be nonnegative");
    const double g3ms = specfun::gamma(3.0 - sigma);
    return std::abs(b) / specfun::gamma(sigma) + M * (1.0 + g3ms) / (2.0 - sigma);
}

ExistenceWindow existence_window(const ProblemSpec& spec) {
    spec.validate();
    const double M = bound_M(spec);
    const double C = existence_constant(spec.b, spec.sigma, M);
    const double ratio = spec.total_radius() / C;

    ExistenceWindow win;
    win.C = C;
    if (ratio >= 1.0) {
        win.alpha = 1.0;
        win.case_tag = "r/C >= 1, alpha = 1";
    } else if (spec.sigma <= 1.5) {
        win.alpha = spec.sigma - 1.0;
        win.case_tag = "r/C < 1, sigma <= 1.5, alpha = sigma-1";
    } else {
        win.alpha = 2.0 - spec.sigma;
        win.case_tag = "r/C < 1, sigma >= 1.5, alpha = 2-sigma";
    }

    const double window = std::pow(ratio, 1.0 / win.alpha);
    if (spec.T < window) {
        win.T0 = spec.T;
        win.truncated_by_T = true;
        win.case_tag = "T < (r/C)^{1/alpha} window; " + win.case_tag;
    } else {
        win.T0 = window;
        win.truncated_by_T = false;
    }
    return win;
}

}  // namespace fracivp::problem
