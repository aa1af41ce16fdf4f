#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracivp/problem.hpp"
#include "fracivp/solver.hpp"

namespace fracivp::certificates {

enum class CertificateKind { nagumo, krasnoselskii_krein, osgood };

const char* kind_name(CertificateKind k);

/// Sample point where an inequality was tightest or violated.
struct Witness {
    std::string inequality;
    double x, w1, v1, w2, v2;
    double margin;  // rhs - lhs; negative means violated
};

struct CertificateReport {
    CertificateKind kind;
    bool holds = false;
    std::map<std::string, double> thresholds;  // named values and margins
    std::vector<Witness> witnesses;
    std::vector<double> probe_values;  // osgood divergence probe, one per epsilon
    std::string notes;
};

/// Sampled lower estimate of the Lipschitz constant of the regular part:
/// max over random pairs (same x) of |g(x,a)-g(x,b)| / (|dw|+|dv|).
double estimate_lipschitz(const problem::ProblemSpec& spec, int samples,
                          std::uint64_t seed = 0);

/// Nagumo-type certificate: holds iff L <= (2-sigma)/(T (1+Gamma(3-sigma))).
/// `horizon` defaults to the problem's declared T.
CertificateReport nagumo_check(const problem::ProblemSpec& spec, double L,
                               std::optional<double> horizon = std::nullopt);

/// Krasnoselskii-Krein-type certificate: the exponent condition
/// (1-sigma)(1-alpha) - L(1-alpha) + 1 > 0 plus the two sampled inequalities
/// with constants L/2 and (C, alpha). Also reports the feasible alpha
/// interval (max(0, 1 - 1/(sigma-1+L)), 1).
CertificateReport kk_check(const problem::ProblemSpec& spec, double L, double C,
                           double alpha, int samples, std::uint64_t seed = 0);

/// Osgood-type certificate: conjugacy and q-range preconditions (throws
/// ValidationError on violation), the C lower bound of the theorem, the
/// sampled modulus inequality, and a finite divergence probe of
/// int_eps^gamma du/modulus(u) reported as consistent-with-divergence only.
CertificateReport osgood_check(const problem::ProblemSpec& spec,
                               const expr::Expr& modulus, double p, double C,
                               int samples, const std::vector<double>& eps_sequence,
                               double gamma_upper = 1.0, std::uint64_t seed = 0);

/// Mean-value diagnostic: scans (0, x) for a root mu of
///   F(mu) = w(x) + v(0) x^{sigma-1}/Gamma(sigma)
///           - Gamma(2-sigma) mu^{sigma-1} v(mu)
/// by sign change plus bisection. Absence of a witness is a valid result.
std::optional<double> mean_value_witness(double sigma, const solver::SolutionPair& sol,
                                         double x);

}  // namespace fracivp::certificates
