// Microbenchmarks for the cipher primitives, key schedules and the ECB path.
//
//   ./cipherselect_benchmarks --benchmark_filter=Ecb
//
// These complement `cipherselect bench`, which measures the case-study grid
// with the harness used for profiles.

#include <benchmark/benchmark.h>

#include "cipherselect/cipher.hpp"
#include "cipherselect/mode.hpp"
#include "cipherselect/workload.hpp"

using namespace cipherselect;

namespace {

void BM_EcbEncrypt(benchmark::State& state) {
    const auto id = static_cast<CipherId>(state.range(0));
    const int bits = static_cast<int>(state.range(1));
    const auto size = static_cast<std::uint64_t>(state.range(2));
    const CipherState keyed = make_cipher_state(KeyMaterial::generate(id, bits, 1));
    const Workload w = generate_workload({WorkloadKind::RandomDense, size, 1});
    Bytes out;
    out.reserve(ecb_ciphertext_size(keyed, size));
    for (auto _ : state) {
        state.PauseTiming();
        CipherState s = keyed;
        state.ResumeTiming();
        ecb_encrypt_into(s, w.bytes, out);
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * size));
    state.SetLabel(std::string(to_string(id)) + "-" + std::to_string(bits));
}

void BM_KeySchedule(benchmark::State& state) {
    const auto id = static_cast<CipherId>(state.range(0));
    const int bits = static_cast<int>(state.range(1));
    const KeyMaterial key = KeyMaterial::generate(id, bits, 1);
    for (auto _ : state) {
        CipherState s = make_cipher_state(key);
        benchmark::DoNotOptimize(&s);
    }
    state.SetLabel(std::string(to_string(id)) + "-" + std::to_string(bits));
}

void cipher_args(benchmark::internal::Benchmark* b, bool with_size) {
    for (auto id : kAllCiphers) {
        const KeySizes& ks = cipher_info(id).key_sizes_bits;
        for (int bits : {ks.minimum(), ks.maximum()}) {
            if (with_size) {
                for (std::int64_t size : {4096, 1 << 20}) b->Args({static_cast<std::int64_t>(id), bits, size});
            } else {
                b->Args({static_cast<std::int64_t>(id), bits});
            }
            if (ks.minimum() == ks.maximum()) break;
        }
    }
}

void BM_WorkloadDensity(benchmark::State& state) {
    const Workload w = generate_workload({WorkloadKind::MediaLike, 1 << 20, 1});
    for (auto _ : state) benchmark::DoNotOptimize(estimate_density(w));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * (1 << 20));
}

}  // namespace

BENCHMARK(BM_EcbEncrypt)->Apply([](auto* b) { cipher_args(b, true); })->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_KeySchedule)->Apply([](auto* b) { cipher_args(b, false); })->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_WorkloadDensity)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
