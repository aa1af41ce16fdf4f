#include <benchmark/benchmark.h>

#include "fracivp/certificates.hpp"
#include "fracivp/expr.hpp"
#include "fracivp/solver.hpp"
#include "fracivp/specfun.hpp"

namespace {

using namespace fracivp;

void BM_GaussJacobiRule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::gauss_jacobi_rule(-0.5, 0.5, n));
}
BENCHMARK(BM_GaussJacobiRule)->Arg(16)->Arg(32)->Arg(64);

void BM_MittagLeffler(benchmark::State& state) {
    double z = 0.0;
    for (auto _ : state) {
        z = z < 5.0 ? z + 1e-3 : 0.0;
        benchmark::DoNotOptimize(specfun::mittag_leffler(1.5, 1.5, z));
    }
}
BENCHMARK(BM_MittagLeffler);

void BM_ExprEval(benchmark::State& state) {
    const expr::Expr g = expr::parse("x^0.5*w + sin(v)*exp(-x)");
    double x = 0.1;
    for (auto _ : state) {
        x += 1e-6;
        benchmark::DoNotOptimize(expr::eval_xwv(g, x, 0.3, 0.7));
    }
}
BENCHMARK(BM_ExprEval);

void BM_PicardSolve(benchmark::State& state) {
    problem::ProblemSpec spec;
    spec.sigma = 1.5;
    spec.b = 1.0;
    spec.T = 0.5;
    spec.g = expr::parse("x^0.5*w");
    spec.r1 = spec.r2 = 5.0;
    spec.M = 1.0;
    solver::SolverConfig cfg;
    cfg.n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solver::picard_solve(spec, cfg));
}
BENCHMARK(BM_PicardSolve)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
