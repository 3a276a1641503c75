#include <benchmark/benchmark.h>

#include "qccd/bench.hpp"
#include "qccd/compiler.hpp"
#include "qccd/sim.hpp"

namespace {

qccd::HardwareConfig linear6(int capacity) {
    qccd::HardwareConfig hw;
    hw.graph = qccd::make_linear(6);
    hw.topology_desc = "linear6";
    hw.capacity = capacity;
    return hw;
}

void BM_CompileQft(benchmark::State& state) {
    auto c = qccd::gen({qccd::BenchFamily::QFT, static_cast<int>(state.range(0))});
    auto hw = linear6(10);
    for (auto _ : state) benchmark::DoNotOptimize(qccd::compile(c, hw));
}
BENCHMARK(BM_CompileQft)->Arg(16)->Arg(32);

void BM_SimulateRandomNN(benchmark::State& state) {
    qccd::BenchSpec spec;
    spec.family = qccd::BenchFamily::RandomNN;
    spec.n = static_cast<int>(state.range(0));
    spec.depth = 20;
    spec.seed = 1;
    auto c = qccd::gen(spec);
    auto hw = linear6(15);
    auto prog = qccd::compile(c, hw);
    for (auto _ : state) benchmark::DoNotOptimize(qccd::simulate(prog, hw));
}
BENCHMARK(BM_SimulateRandomNN)->Arg(30)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
