#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

#include "cipherselect/cipher.hpp"
#include "cipherselect/workload.hpp"

namespace cipherselect {

/// One timed measurement. elapsed_ns is the median of `reps` timed runs.
struct BenchmarkSample {
    CipherId cipher = CipherId::AES;
    int key_bits = 0;
    WorkloadKind workload_kind = WorkloadKind::RandomDense;
    std::uint64_t size_bytes = 0;
    std::int64_t elapsed_ns = 0;
    int reps = 0;
    int warmup = 0;

    friend bool operator==(const BenchmarkSample&, const BenchmarkSample&) = default;
};

inline constexpr int kDefaultReps = 5;
inline constexpr int kDefaultWarmup = 2;

struct TimingResult {
    BenchmarkSample sample;
    std::vector<std::int64_t> raw_ns;  // one entry per timed rep, in run order
};

/// Times full ECB+PKCS encryption (or RC4) of the workload.
///
/// The key schedule runs once before any timing. `warmup` untimed runs are
/// followed by `reps` runs on the steady clock, each writing into the same
/// preallocated output buffer. RC4 restarts from a copy of the freshly keyed
/// state on every run; the copy is taken outside the timed region.
TimingResult time_encryption_detailed(const KeyMaterial& key, const Workload& w, int reps = kDefaultReps,
                                      int warmup = kDefaultWarmup);

/// Same measurement for every (key, workload) pair, with repetitions
/// interleaved: each round times every pair once, so slow or fast phases of
/// a shared host spread across all pairs instead of landing on one of them.
/// Results are key-major: index k * workloads.size() + i.
std::vector<TimingResult> time_encryption_interleaved(const std::vector<KeyMaterial>& keys,
                                                      const std::vector<const Workload*>& workloads,
                                                      int reps = kDefaultReps, int warmup = kDefaultWarmup);

inline BenchmarkSample time_encryption(const KeyMaterial& key, const Workload& w, int reps = kDefaultReps,
                                       int warmup = kDefaultWarmup) {
    return time_encryption_detailed(key, w, reps, warmup).sample;
}

/// MiB per second: (size_bytes / 2^20) / (elapsed_ns / 1e9).
double encryption_rate(const BenchmarkSample& s);
double encryption_rate(std::uint64_t size_bytes, double elapsed_ns);

/// Parameters for one of the four case-study scenarios:
///  1. data-type independence: one size, several kinds, minimum keys;
///  2. size linearity: one kind, several sizes, minimum keys;
///  3. density independence: one size, zeros_sparse and random_dense;
///  4. key-size sweep: one workload, per-cipher list of key sizes.
struct CaseStudyConfig {
    int study = 0;
    std::vector<CipherId> ciphers;
    std::vector<std::uint64_t> sizes;
    std::vector<WorkloadKind> kinds;
    std::map<CipherId, std::vector<int>> key_bits_sweep;
    int reps = kDefaultReps;
    int warmup = kDefaultWarmup;
    std::uint64_t seed = 1;
};

/// Desk-scale defaults that finish in seconds to a couple of minutes.
CaseStudyConfig default_case_study(int study);

/// Throws Error(ConfigMismatch) if a field the study needs is missing or
/// over-specified.
void validate(const CaseStudyConfig& cfg);

using ProgressFn = std::function<void(const BenchmarkSample&)>;

/// Runs every (cipher, key size, kind, size) combination of the study.
/// Workloads are generated once per (kind, size) and keys scheduled once
/// before any timing; all pairs are then timed with interleaved repetitions.
/// `progress` is called once per sample after the timing finishes.
std::vector<BenchmarkSample> run_case_study(const CaseStudyConfig& cfg, const ProgressFn& progress = {});

void write_samples_csv(std::ostream& os, const std::vector<BenchmarkSample>& samples);
void write_samples_jsonl(std::ostream& os, const std::vector<BenchmarkSample>& samples);

}  // namespace cipherselect
