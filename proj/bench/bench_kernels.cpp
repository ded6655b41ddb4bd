// OpenMP kernels against their single-threaded references. Thread count
// follows OMP_NUM_THREADS.
#include <benchmark/benchmark.h>

#include "enrcurve/lattice.hpp"
#include "enrcurve/seeker.hpp"

using namespace enrcurve;

namespace {

const BiForm& branch() {
    static const BiForm b = random_admissible_branch(7);
    return b;
}

void BM_SeekParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(seek(branch(), 2, static_cast<std::size_t>(state.range(0)), 1));
}

void BM_SeekSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(seek_serial(branch(), 2, static_cast<std::size_t>(state.range(0)), 1));
}

void BM_PhiParallel(benchmark::State& state) {
    const LatticeVector h = cy_class(3) + LatticeVector::v(1);
    for (auto _ : state) benchmark::DoNotOptimize(phi(h, static_cast<int>(state.range(0))));
}

void BM_PhiSerial(benchmark::State& state) {
    const LatticeVector h = cy_class(3) + LatticeVector::v(1);
    for (auto _ : state) benchmark::DoNotOptimize(phi_serial(h, static_cast<int>(state.range(0))));
}

void BM_CongruenceParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(congruence_scan(static_cast<int>(state.range(0))));
}

void BM_CongruenceSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(congruence_scan_serial(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_SeekParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeekSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CongruenceParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CongruenceSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
