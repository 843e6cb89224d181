#include <benchmark/benchmark.h>

#include <random>

#include "altlin/catalog.hpp"
#include "altlin/dynamics.hpp"
#include "altlin/geometry.hpp"
#include "altlin/moyal.hpp"
#include "altlin/weyl.hpp"

using namespace altlin;

namespace {

void BM_SolveK(benchmark::State& state) {
    KTransform t(0.1);
    double r = 0.0;
    for (auto _ : state) {
        r += 1e-4;
        benchmark::DoNotOptimize(t.solve_K(r));
    }
}
BENCHMARK(BM_SolveK);

void BM_DeformedAdd(benchmark::State& state) {
    LinearStructure s = KTransform(0.1).structure();
    Vec u(2), v(2);
    u << 1.1, -0.4;
    v << 0.3, 0.9;
    for (auto _ : state) benchmark::DoNotOptimize(s.add(u, v));
}
BENCHMARK(BM_DeformedAdd);

void BM_PushforwardFrame(benchmark::State& state) {
    Diffeo d = KTransform(0.1).as_diffeo();
    Vec pt(2);
    pt << 1.1, 0.3;
    for (auto _ : state) benchmark::DoNotOptimize(pushforward_frame(d, pt));
}
BENCHMARK(BM_PushforwardFrame);

void BM_MagneticFlow(benchmark::State& state) {
    MagneticSystem sys = magnetic_matrices(1.0);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(sys.F(t));
    }
}
BENCHMARK(BM_MagneticFlow);

void BM_Expm4x4(benchmark::State& state) {
    MagneticSystem sys = magnetic_matrices(1.0);
    Mat G = sys.G;
    for (auto _ : state) benchmark::DoNotOptimize(expm(2.0 * G));
}
BENCHMARK(BM_Expm4x4);

void BM_Rk4OscillatorPeriod(benchmark::State& state) {
    FlowProblem p;
    p.field = [](const Vec& x) {
        Vec v(2);
        v << x(1), -x(0);
        return v;
    };
    p.t1 = 6.283185307179586;
    p.dt = 1e-3;
    p.initial = Vec(2);
    p.initial << 1.0, 0.0;
    for (auto _ : state) benchmark::DoNotOptimize(integrate(p));
}
BENCHMARK(BM_Rk4OscillatorPeriod);

void BM_StarDegree4(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    PhasePoly f, g;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            f += PhasePoly::monomial(i, j, coeff(rng));
            g += PhasePoly::monomial(i, j, coeff(rng));
        }
    for (auto _ : state) benchmark::DoNotOptimize(star(f, g, 0.1));
}
BENCHMARK(BM_StarDegree4);

void BM_WeylApply(benchmark::State& state) {
    Grid1D g(static_cast<int>(state.range(0)), 10.0);
    GridOperator W = weyl_operator(g, 4 * g.delta(), 0.5, 1.0);
    CVec psi = gaussian_state(g, 0.0, 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(W.apply(psi));
}
BENCHMARK(BM_WeylApply)->Arg(128)->Arg(512);

void BM_AdjointWrt(benchmark::State& state) {
    Grid1D g(static_cast<int>(state.range(0)), 10.0);
    auto [x, p] = position_momentum(g, 1.0);
    Eigen::VectorXd mdQ = measure_vector(g, Measure::dQ, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(adjoint_wrt(p, mdQ));
}
BENCHMARK(BM_AdjointWrt)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
