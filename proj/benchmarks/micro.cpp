#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "qceqio/pathsum.hpp"
#include "qceqio/pit.hpp"
#include "qceqio/reduce.hpp"
#include "qceqio/statevector.hpp"

using namespace qceqio;

static void BM_pathsum_layered_h(benchmark::State& state) {
    Circuit c = corpus::layered_h(static_cast<uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(circuit_pathsum(c));
    }
}
BENCHMARK(BM_pathsum_layered_h)->Arg(8)->Arg(16)->Arg(20);

static void BM_reduce_qft_miter(benchmark::State& state) {
    Circuit q = corpus::qft(static_cast<uint32_t>(state.range(0)));
    PathSum miter = circuit_pathsum(concat(q, inverse(q)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(miter));
    }
}
BENCHMARK(BM_reduce_qft_miter)->Arg(3)->Arg(5);

static void BM_statevector_hsp(benchmark::State& state) {
    Circuit c = corpus::hsp(static_cast<uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_state(c, 0));
    }
}
BENCHMARK(BM_statevector_hsp)->Arg(10)->Arg(16);

static void BM_pit_qft_phase(benchmark::State& state) {
    PathSum p = circuit_pathsum(corpus::qft(static_cast<uint32_t>(state.range(0))));
    PhasePoly phase = p.phase;
    PitConfig cfg;
    uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(pit_phase_equal(phase, phase, cfg));
    }
}
BENCHMARK(BM_pit_qft_phase)->Arg(5)->Arg(8);

static void BM_check_obfuscated(benchmark::State& state) {
    Circuit c = corpus::qft(4);
    QuantumImplementation impl;
    impl.prep.n_wires = c.n_wires;
    impl.main = c;
    for (uint32_t i = 0; i < c.n_wires; ++i) impl.data_wires.push_back(i);
    ObfuscationConfig ocfg;
    ocfg.lambda = 2;
    ocfg.ell = static_cast<uint32_t>(state.range(0));
    QuantumImplementation obf = obfuscate(impl, ocfg);
    Circuit positive = concat(obf.prep, obf.main);
    Circuit original = tensor_extend(c, ocfg.lambda);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_equivalence(positive, original));
    }
}
BENCHMARK(BM_check_obfuscated)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
