#include <benchmark/benchmark.h>

#include "cellgeom/analytic_fixedrate.hpp"
#include "cellgeom/analytic_rateless.hpp"
#include "cellgeom/simulator.hpp"
#include "cellgeom/specialfun.hpp"

using namespace cellgeom;

static void BM_Hyp2f1Coverage(benchmark::State& state) {
    double theta = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specialfun::hyp2f1_coverage(theta, 2.0 / 3.0));
        theta = theta > 100.0 ? 0.01 : theta * 1.3;
    }
}
BENCHMARK(BM_Hyp2f1Coverage);

static void BM_ExpIntegralE1(benchmark::State& state) {
    double x = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specialfun::exp_integral_e1(x));
        x = x > 50.0 ? 1e-3 : x * 1.5;
    }
}
BENCHMARK(BM_ExpIntegralE1);

static void BM_ThinningRate(benchmark::State& state) {
    const auto p = AnalyticalParams::make(1.0, 4.0, 75.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rateless::ps_rate_thinning_sync(p));
}
BENCHMARK(BM_ThinningRate)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_PsFpc(benchmark::State& state) {
    const auto p = AnalyticalParams::make(1.0, 4.0, 75.0, 100);
    const auto policy = fixedrate::PowerPolicy::pathloss_fpc(1.0, 1.55);
    for (auto _ : state) benchmark::DoNotOptimize(fixedrate::ps_fpc(fixedrate::SirThreshold::from(p), policy, p));
}
BENCHMARK(BM_PsFpc)->Unit(benchmark::kMillisecond);

static void BM_TviTrial(benchmark::State& state) {
    sim::SimConfig c;
    c.side = static_cast<double>(state.range(0));
    c.N = 100;
    c.seed = 1;
    const auto net = sim::sample_network(c, 0);
    for (auto _ : state) benchmark::DoNotOptimize(sim::simulate_rateless_tvi(net, c));
    state.counters["users"] = static_cast<double>(net.size());
}
BENCHMARK(BM_TviTrial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_SampleNetwork(benchmark::State& state) {
    sim::SimConfig c;
    c.side = 60.0;
    std::uint32_t trial = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sim::sample_network(c, trial++));
}
BENCHMARK(BM_SampleNetwork)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
