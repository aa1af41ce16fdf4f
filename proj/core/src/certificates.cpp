#include "fracivp/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "fracivp/errors.hpp"
#include "fracivp/interp.hpp"
#include "fracivp/specfun.hpp"

namespace fracivp::certificates {

const char* kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::nagumo: return "nagumo";
        case CertificateKind::krasnoselskii_krein: return "krasnoselskii_krein";
        case CertificateKind::osgood: return "osgood";
    }
    return "?";
}

namespace {

struct SamplePair {
    double x, w1, v1, w2, v2;
};

class PairSampler {
  public:
    PairSampler(const problem::ProblemSpec& spec, std::uint64_t seed)
        : rng_(seed),
          ux_(0.0, spec.T),
          uw_(-spec.r1, spec.r1),
          uv_(spec.b - spec.r2, spec.b + spec.r2) {}

    // Stratified: a quarter of the draws move only w, a quarter only v.
    // Along an axis the difference quotient of a linear map is exact, which
    // is what lets the estimator hit closed-form constants on linear g.
    SamplePair next() {
        SamplePair s;
        s.x = ux_(rng_);
        s.w1 = uw_(rng_);
        s.v1 = uv_(rng_);
        const int mode = count_++ % 4;
        s.w2 = (mode == 1) ? s.w1 : uw_(rng_);
        s.v2 = (mode == 0) ? s.v1 : uv_(rng_);
        return s;
    }

  private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> ux_, uw_, uv_;
    int count_ = 0;
};

double g_gap(const problem::ProblemSpec& spec, const SamplePair& s) {
    return std::abs(expr::eval_xwv(spec.g, s.x, s.w1, s.v1) -
                    expr::eval_xwv(spec.g, s.x, s.w2, s.v2));
}

// adaptive Simpson on [a,b]
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int depth = 52) {
    const double c = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fc = f(c);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
    const std::function<double(double, double, double, double, double, double, int)>
        rec = [&](double a_, double b_, double fa_, double fb_, double fc_,
                  double whole_, int depth_) -> double {
        const double c_ = 0.5 * (a_ + b_);
        const double d_ = 0.5 * (a_ + c_), e_ = 0.5 * (c_ + b_);
        const double fd = f(d_), fe = f(e_);
        const double left = (c_ - a_) / 6.0 * (fa_ + 4.0 * fd + fc_);
        const double right = (b_ - c_) / 6.0 * (fc_ + 4.0 * fe + fb_);
        if (depth_ <= 0 || std::abs(left + right - whole_) < 15.0 * tol)
            return left + right + (left + right - whole_) / 15.0;
        return rec(a_, c_, fa_, fc_, fd, left, depth_ - 1) +
               rec(c_, b_, fc_, fb_, fe, right, depth_ - 1);
    };
    return rec(a, b, fa, fb, fc, whole, depth);
}

}  // namespace

double estimate_lipschitz(const problem::ProblemSpec& spec, int samples,
                          std::uint64_t seed) {
    spec.validate();
    if (samples < 1) throw ValidationError("samples", "must be >= 1");
    PairSampler sampler(spec, seed);
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        const SamplePair s = sampler.next();
        const double denom = std::abs(s.w1 - s.w2) + std::abs(s.v1 - s.v2);
        if (denom < 1e-12) continue;
        best = std::max(best, g_gap(spec, s) / denom);
    }
    return best;
}

CertificateReport nagumo_check(const problem::ProblemSpec& spec, double L,
                               std::optional<double> horizon) {
    spec.validate();
    if (L < 0.0) throw ValidationError("L", "must be nonnegative");
    const double T = horizon.value_or(spec.T);
    const double threshold =
        (2.0 - spec.sigma) / (T * (1.0 + specfun::gamma(3.0 - spec.sigma)));

    CertificateReport rep;
    rep.kind = CertificateKind::nagumo;
    rep.thresholds["nagumo_bound"] = threshold;
    rep.thresholds["L"] = L;
    rep.thresholds["margin"] = threshold - L;
    rep.holds = L <= threshold;
    rep.notes = rep.holds ? "L within the Nagumo smallness bound"
                          : "L exceeds the Nagumo smallness bound";
    return rep;
}

CertificateReport kk_check(const problem::ProblemSpec& spec, double L, double C,
                           double alpha, int samples, std::uint64_t seed) {
    spec.validate();
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ValidationError("alpha", "must lie strictly inside (0,1)");
    if (!(L > 0.0)) throw ValidationError("L", "must be positive");
    if (!(C > 0.0)) throw ValidationError("C", "must be positive");
    if (samples < 1) throw ValidationError("samples", "must be >= 1");

    CertificateReport rep;
    rep.kind = CertificateKind::krasnoselskii_krein;

    const double exponent_lhs =
        (1.0 - spec.sigma) * (1.0 - alpha) - L * (1.0 - alpha) + 1.0;
    const double feasible_low = std::max(0.0, 1.0 - 1.0 / (spec.sigma - 1.0 + L));
    rep.thresholds["exponent_condition"] = exponent_lhs;
    rep.thresholds["feasible_alpha_low"] = feasible_low;
    rep.thresholds["alpha"] = alpha;
    const bool exponent_ok = exponent_lhs > 0.0;

    PairSampler sampler(spec, seed);
    Witness tight_lip{"lipschitz_half", 0, 0, 0, 0, 0,
                      std::numeric_limits<double>::infinity()};
    Witness tight_holder{"holder_weighted", 0, 0, 0, 0, 0,
                         std::numeric_limits<double>::infinity()};
    for (int k = 0; k < samples; ++k) {
        const SamplePair s = sampler.next();
        const double gap = g_gap(spec, s);
        const double dw = std::abs(s.w1 - s.w2), dv = std::abs(s.v1 - s.v2);
        const double m1 = 0.5 * L * (dw + dv) - gap;
        const double m2 =
            C * (dw + std::pow(s.x, alpha * (spec.sigma - 1.0)) * dv) - gap;
        if (m1 < tight_lip.margin)
            tight_lip = {"lipschitz_half", s.x, s.w1, s.v1, s.w2, s.v2, m1};
        if (m2 < tight_holder.margin)
            tight_holder = {"holder_weighted", s.x, s.w1, s.v1, s.w2, s.v2, m2};
    }
    rep.witnesses = {tight_lip, tight_holder};
    rep.thresholds["lipschitz_half_margin"] = tight_lip.margin;
    rep.thresholds["holder_weighted_margin"] = tight_holder.margin;

    rep.holds = exponent_ok && tight_lip.margin >= 0.0 && tight_holder.margin >= 0.0;
    rep.notes = exponent_ok ? "sampled falsification only, not a proof"
                            : "exponent condition (1-sigma)(1-alpha)-L(1-alpha)+1 > 0 fails";
    return rep;
}

CertificateReport osgood_check(const problem::ProblemSpec& spec,
                               const expr::Expr& modulus, double p, double C,
                               int samples, const std::vector<double>& eps_sequence,
                               double gamma_upper, std::uint64_t seed) {
    spec.validate();
    if (!(p > 1.0)) throw ValidationError("p", "must exceed 1");
    if (!(C > 0.0)) throw ValidationError("C", "must be positive");
    if (samples < 1) throw ValidationError("samples", "must be >= 1");
    if (eps_sequence.empty())
        throw ValidationError("eps", "need a decreasing positive sequence");
    for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
        if (!(eps_sequence[i] > 0.0) ||
            (i > 0 && !(eps_sequence[i] < eps_sequence[i - 1])))
            throw ValidationError("eps", "must be strictly decreasing and positive");
    }
    const double q = p / (p - 1.0);
    if (!(1.0 + (1.0 - spec.sigma) * q > 0.0))
        throw ValidationError(
            "p", "conjugate q = p/(p-1) violates the range q < 1/(sigma-1)");

    const auto mod_at = [&](double u) {
        const double uu[1] = {u};
        return modulus.eval(uu);
    };
    if (std::abs(mod_at(0.0)) > 1e-12)
        throw ValidationError("modulus", "must vanish at 0");
    // monotonicity probe on a uniform sample of [0, gamma_upper]
    double prev = 0.0;
    for (int k = 1; k <= 256; ++k) {
        const double u = gamma_upper * k / 256.0;
        const double m = mod_at(u);
        if (m < prev - 1e-12)
            throw DomainError("modulus monotonicity violation at sampled points");
        prev = std::max(prev, m);
    }

    CertificateReport rep;
    rep.kind = CertificateKind::osgood;
    rep.thresholds["q"] = q;
    rep.thresholds["q_max"] = 1.0 / (spec.sigma - 1.0);

    // constant condition of the theorem, with |b| in place of the paper's b
    const double T0 = problem::existence_window(spec).T0;
    const double gs = specfun::gamma(spec.sigma);
    const double a1 = std::abs(spec.b) * std::pow(gs, q) /
                      (T0 * specfun::gamma(1.0 + (1.0 - spec.sigma) * q) *
                       specfun::gamma(1.0 + (spec.sigma - 1.0) * q));
    const double a2 = (1.0 + (1.0 - spec.sigma) * q) *
                      std::pow(T0, -1.0 - q * (1.0 - spec.sigma));
    const double c_lower = std::pow(2.0 * std::max(a1, a2), 1.0 / q);
    rep.thresholds["C"] = C;
    rep.thresholds["C_lower_bound"] = c_lower;
    const bool c_ok = std::pow(C, q) >= 2.0 * std::max(a1, a2);

    PairSampler sampler(spec, seed);
    Witness tight{"osgood_modulus", 0, 0, 0, 0, 0,
                  std::numeric_limits<double>::infinity()};
    for (int k = 0; k < samples; ++k) {
        const SamplePair s = sampler.next();
        const double gap = g_gap(spec, s);
        const double arg = std::pow(std::abs(s.w1 - s.w2), p) +
                           std::pow(std::abs(s.v1 - s.v2), p);
        const double rhs = C * std::pow(mod_at(arg), 1.0 / p);
        const double m = rhs - gap;
        if (m < tight.margin) tight = {"osgood_modulus", s.x, s.w1, s.v1, s.w2, s.v2, m};
    }
    rep.witnesses = {tight};
    rep.thresholds["osgood_modulus_margin"] = tight.margin;

    // finite divergence probe; growth is evidence, never proof
    for (double eps : eps_sequence) {
        rep.probe_values.push_back(adaptive_simpson(
            [&](double u) { return 1.0 / mod_at(u); }, eps, gamma_upper, 1e-10));
    }
    bool diverging = rep.probe_values.size() >= 2;
    const std::size_t m = rep.probe_values.size();
    for (std::size_t i = 1; i < m; ++i)
        if (rep.probe_values[i] <= rep.probe_values[i - 1]) diverging = false;
    if (m >= 4) {
        // last three increments non-decreasing
        for (std::size_t i = m - 3; i < m; ++i)
            if (rep.probe_values[i] - rep.probe_values[i - 1] <
                rep.probe_values[i - 1] - rep.probe_values[i - 2] - 1e-12)
                diverging = false;
    }
    rep.thresholds["divergence_consistent"] = diverging ? 1.0 : 0.0;

    rep.holds = c_ok && tight.margin >= 0.0 && diverging;
    rep.notes = diverging ? "probe consistent with divergence (not a proof)"
                          : "divergence probe inconclusive";
    return rep;
}

std::optional<double> mean_value_witness(double sigma, const solver::SolutionPair& sol,
                                         double x) {
    if (!(sigma > 1.0 && sigma < 2.0)) throw DomainError("sigma out of range");
    const int n = sol.grid.n;
    if (!(x > 0.0) || x > sol.grid.endpoint + 1e-14)
        throw DomainError("x must be a positive grid point of the solution");
    const int ix = static_cast<int>(std::lround(x / sol.grid.spacing()));
    if (std::abs(sol.grid.point(ix) - x) > 1e-12 * sol.grid.endpoint || ix < 1)
        throw DomainError("x must be a positive grid point of the solution");

    const double gs = specfun::gamma(sigma);
    const double g2ms = specfun::gamma(2.0 - sigma);
    const double d_init = sol.v[0];
    const double lhs = sol.w[ix] + d_init * std::pow(x, sigma - 1.0) / gs;

    const std::vector<double> knots = sol.grid.points();
    const interp::Pchip v_interp(knots, sol.v);
    const auto F = [&](double mu) {
        return lhs - g2ms * std::pow(mu, sigma - 1.0) * v_interp(mu);
    };

    const double scale = std::max(1.0, std::abs(lhs));
    bool all_zero = true;
    for (int j = 1; j < ix; ++j) {
        if (std::abs(F(knots[j])) > 1e-13 * scale) {
            all_zero = false;
            break;
        }
    }
    if (all_zero && ix > 1) return 0.5 * x;  // identically zero defect

    for (int j = 1; j + 1 <= ix; ++j) {
        double a = knots[j], b = knots[std::min(j + 1, ix)];
        if (b >= x) b = std::nexttoward(x, 0.0);
        double fa = F(a), fb = F(b);
        if (fa == 0.0) return a;
        if (fa * fb > 0.0) continue;
        for (int it = 0; it < 80; ++it) {
            const double c = 0.5 * (a + b), fc = F(c);
            if (fc == 0.0) return c;
            if (fa * fc < 0.0) {
                b = c;
                fb = fc;
            } else {
                a = c;
                fa = fc;
            }
        }
        return 0.5 * (a + b);
    }
    return std::nullopt;
}

}  // namespace fracivp::certificates
