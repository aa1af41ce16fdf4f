#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fracivp/certificates.hpp"
#include "fracivp/errors.hpp"
#include "fracivp/problem_io.hpp"
#include "fracivp/solver.hpp"

namespace {

using namespace fracivp;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitCertificateFails = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed,
                           std::uint64_t file_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("FRAC_IVP_SEED")) return std::strtoull(env, nullptr, 10);
    return file_seed;
}

std::ostream& open_output(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw ValidationError("--out", "cannot open '" + out_path + "'");
    return file;
}

int cmd_solve(const std::string& path, std::optional<int> n, std::optional<double> tol,
              const std::string& out_path) {
    io::ProblemFile pf = io::load_problem_file(path);
    if (n) pf.solver.n = *n;
    if (tol) pf.solver.tol = *tol;
    pf.solver.validate();

    solver::SolutionPair sol;
    try {
        sol = solver::picard_solve(pf.spec, pf.solver);
    } catch (const ConvergenceError& e) {
        std::cerr << "solve: " << e.what() << "\n";
        return kExitNoConvergence;
    }

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << "x,w,v\n";
    for (int i = 0; i <= sol.grid.n; ++i)
        os << fmt17(sol.grid.point(i)) << ',' << fmt17(sol.w[i]) << ',' << fmt17(sol.v[i])
           << '\n';

    std::cerr << "iterations: " << sol.iterations << "\n"
              << "final update norm: " << fmt17(sol.final_update_norm) << "\n"
              << "box escape: " << (sol.box_escape ? "yes (solution not certified)" : "no")
              << "\n";
    return kExitOk;
}

int cmd_window(const std::string& path) {
    const io::ProblemFile pf = io::load_problem_file(path);
    const auto win = problem::existence_window(pf.spec);
    std::cout << "T0: " << fmt17(win.T0) << "\n"
              << "alpha: " << fmt17(win.alpha) << "\n"
              << "C(b,sigma,M): " << fmt17(win.C) << "\n"
              << "case: " << win.case_tag << "\n"
              << "truncated by T: " << (win.truncated_by_T ? "yes" : "no") << "\n";
    return kExitOk;
}

void print_report(const certificates::CertificateReport& rep) {
    std::cout << "certificate: " << certificates::kind_name(rep.kind) << "\n"
              << "holds: " << (rep.holds ? "yes" : "no") << "\n";
    for (const auto& [name, value] : rep.thresholds)
        std::cout << name << ": " << fmt17(value) << "\n";
    for (const auto& w : rep.witnesses)
        std::cout << "witness[" << w.inequality << "]: x=" << fmt17(w.x)
                  << " (w1,v1)=(" << fmt17(w.w1) << ',' << fmt17(w.v1) << ")"
                  << " (w2,v2)=(" << fmt17(w.w2) << ',' << fmt17(w.v2) << ")"
                  << " margin=" << fmt17(w.margin) << "\n";
    if (!rep.probe_values.empty()) {
        std::cout << "divergence probe:";
        for (double v : rep.probe_values) std::cout << ' ' << fmt17(v);
        std::cout << "\n";
    }
    std::cout << "notes: " << rep.notes << "\n";
}

template <typename T>
T require_param(const std::optional<T>& v, const char* name) {
    if (!v)
        throw ValidationError(std::string("certificates.") + name,
                              "required for this certificate kind");
    return *v;
}

int cmd_certify(const std::string& path, const std::string& kind,
                std::optional<std::uint64_t> flag_seed) {
    const io::ProblemFile pf = io::load_problem_file(path);
    const auto& cp = pf.certificates;
    const std::uint64_t seed = resolve_seed(flag_seed, cp.seed);

    certificates::CertificateReport rep;
    if (kind == "nagumo") {
        rep = certificates::nagumo_check(pf.spec, require_param(cp.L, "L"));
    } else if (kind == "kk") {
        rep = certificates::kk_check(pf.spec, require_param(cp.L, "L"),
                                     require_param(cp.C, "C"),
                                     require_param(cp.alpha, "alpha"), cp.samples, seed);
    } else if (kind == "osgood") {
        const std::string mod_text = require_param(cp.modulus, "modulus");
        const std::vector<std::string> var_u = {"u"};
        const expr::Expr modulus = expr::parse(mod_text, var_u);
        rep = certificates::osgood_check(pf.spec, modulus, require_param(cp.p, "p"),
                                         require_param(cp.C, "C"), cp.samples, cp.eps,
                                         cp.gamma_upper, seed);
    } else {
        throw ValidationError("--kind", "must be one of nagumo, kk, osgood");
    }
    print_report(rep);
    return rep.holds ? kExitOk : kExitCertificateFails;
}

// split "<w-expr>,<v-expr>" at the last depth-0 comma
std::pair<std::string, std::string> split_oracle(const std::string& text) {
    int depth = 0;
    for (std::size_t i = text.size(); i-- > 0;) {
        if (text[i] == ')') ++depth;
        else if (text[i] == '(') --depth;
        else if (text[i] == ',' && depth == 0)
            return {text.substr(0, i), text.substr(i + 1)};
    }
    throw ValidationError("--oracle", "expected '<w-expr>,<v-expr>'");
}

int cmd_study(const std::string& path, const std::string& grids,
              const std::string& oracle, const std::string& out_path) {
    const io::ProblemFile pf = io::load_problem_file(path);

    std::vector<int> ns;
    std::stringstream gs(grids);
    for (std::string tok; std::getline(gs, tok, ',');) {
        const int n = std::atoi(tok.c_str());
        if (n < 8) throw ValidationError("--grids", "grid sizes must be >= 8");
        ns.push_back(n);
    }
    if (ns.empty()) throw ValidationError("--grids", "empty grid list");

    const auto [w_text, v_text] = split_oracle(oracle);
    const std::vector<std::string> var_x = {"x"};
    const expr::Expr oracle_w = expr::parse(w_text, var_x);
    const expr::Expr oracle_v = expr::parse(v_text, var_x);

    std::vector<solver::RefineRow> rows;
    try {
        rows = solver::refine_study(pf.spec, ns, oracle_w, oracle_v, pf.solver);
    } catch (const ConvergenceError& e) {
        std::cerr << "study: " << e.what() << "\n";
        return kExitNoConvergence;
    }

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << "n,err_w,err_v,order_w,order_v\n";
    for (const auto& r : rows) {
        os << r.n << ',' << fmt17(r.err_w) << ',' << fmt17(r.err_v) << ',';
        os << (std::isnan(r.order_w) ? std::string("NA") : fmt17(r.order_w)) << ',';
        os << (std::isnan(r.order_v) ? std::string("NA") : fmt17(r.order_v)) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann-Liouville fractional IVP solver and uniqueness auditor"};
    app.require_subcommand(1);

    std::string file, out_path, kind, grids = "64,128,256,512", oracle;
    std::optional<int> n_override;
    std::optional<double> tol_override;
    std::optional<std::uint64_t> seed;

    auto* solve = app.add_subcommand("solve", "run the Picard solver, emit x,w,v CSV");
    solve->add_option("file", file, "problem file (JSON)")->required();
    solve->add_option("--n", n_override, "grid subintervals");
    solve->add_option("--tol", tol_override, "stopping tolerance");
    solve->add_option("--out", out_path, "CSV output path (default stdout)");

    auto* window = app.add_subcommand("window", "print the certified existence window");
    window->add_option("file", file, "problem file (JSON)")->required();

    auto* certify = app.add_subcommand("certify", "evaluate a uniqueness certificate");
    certify->add_option("file", file, "problem file (JSON)")->required();
    certify->add_option("--kind", kind, "nagumo | kk | osgood")->required();
    certify->add_option("--seed", seed, "sampling seed (overrides FRAC_IVP_SEED)");

    auto* study = app.add_subcommand("study", "grid refinement study against an oracle");
    study->add_option("file", file, "problem file (JSON)")->required();
    study->add_option("--grids", grids, "comma-separated grid sizes");
    study->add_option("--oracle", oracle, "'<w-expr>,<v-expr>' in the variable x")
        ->required();
    study->add_option("--out", out_path, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(file, n_override, tol_override, out_path);
        if (window->parsed()) return cmd_window(file);
        if (certify->parsed()) return cmd_certify(file, kind, seed);
        if (study->parsed()) return cmd_study(file, grids, oracle, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
