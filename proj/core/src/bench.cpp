#include "cipherselect/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "cipherselect/error.hpp"
#include "cipherselect/mode.hpp"

namespace cipherselect {

namespace {

constexpr std::uint64_t kMiB = 1ULL << 20;

std::int64_t median(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return v[n / 2 - 1] + (v[n / 2] - v[n / 2 - 1]) / 2;
}

}  // namespace

std::vector<TimingResult> time_encryption_interleaved(const std::vector<KeyMaterial>& keys,
                                                      const std::vector<const Workload*>& workloads, int reps,
                                                      int warmup) {
    if (reps < 1) throw Error(ErrorCode::BadArgument, "reps must be at least 1");
    if (warmup < 0) throw Error(ErrorCode::BadArgument, "warmup must be non-negative");

    std::vector<CipherState> keyed;
    keyed.reserve(keys.size());
    std::size_t largest = 0;
    for (const auto& k : keys) {
        keyed.push_back(make_cipher_state(k));
        for (const auto* w : workloads) largest = std::max(largest, ecb_ciphertext_size(keyed.back(), w->bytes.size()));
    }
    Bytes out;
    out.reserve(largest);

    const std::size_t nw = workloads.size();
    std::vector<TimingResult> results(keys.size() * nw);
    for (auto& r : results) r.raw_ns.reserve(static_cast<std::size_t>(reps));
    volatile std::uint8_t sink = 0;

    for (int run = 0; run < warmup + reps; ++run) {
        for (std::size_t idx = 0; idx < results.size(); ++idx) {
            const std::size_t k = idx / nw;
            const std::size_t i = idx % nw;
            CipherState state = keyed[k];
            const ByteView input = workloads[i]->bytes;
            const auto start = std::chrono::steady_clock::now();
            ecb_encrypt_into(state, input, out);
            const auto stop = std::chrono::steady_clock::now();
            sink = sink ^ (out.empty() ? 0 : out.back());
            if (run >= warmup) {
                const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
                results[idx].raw_ns.push_back(std::max<std::int64_t>(ns, 1));
            }
        }
    }

    for (std::size_t k = 0; k < keys.size(); ++k) {
        for (std::size_t i = 0; i < nw; ++i) {
            const Workload& w = *workloads[i];
            auto& r = results[k * nw + i];
            r.sample = BenchmarkSample{keys[k].cipher, keys[k].key_bits, w.spec.kind, w.spec.size_bytes,
                                       median(r.raw_ns),  reps,             warmup};
        }
    }
    return results;
}

TimingResult time_encryption_detailed(const KeyMaterial& key, const Workload& w, int reps, int warmup) {
    return time_encryption_interleaved({key}, {&w}, reps, warmup).front();
}

double encryption_rate(std::uint64_t size_bytes, double elapsed_ns) {
    if (!(elapsed_ns > 0)) throw Error(ErrorCode::BadArgument, "elapsed time must be positive");
    return (static_cast<double>(size_bytes) / static_cast<double>(kMiB)) / (elapsed_ns / 1e9);
}

double encryption_rate(const BenchmarkSample& s) {
    return encryption_rate(s.size_bytes, static_cast<double>(s.elapsed_ns));
}

CaseStudyConfig default_case_study(int study) {
    CaseStudyConfig cfg;
    cfg.study = study;
    cfg.ciphers.assign(kAllCiphers.begin(), kAllCiphers.end());
    switch (study) {
        case 1:
            cfg.sizes = {4 * kMiB};
            cfg.kinds.assign(kAllWorkloadKinds.begin(), kAllWorkloadKinds.end());
            break;
        case 2:
            cfg.sizes = {1 * kMiB, 2 * kMiB, 4 * kMiB, 8 * kMiB, 16 * kMiB};
            cfg.kinds = {WorkloadKind::MediaLike};
            break;
        case 3:
            cfg.sizes = {8 * kMiB};
            cfg.kinds = {WorkloadKind::ZerosSparse, WorkloadKind::RandomDense};
            break;
        case 4:
            cfg.sizes = {4 * kMiB};
            cfg.kinds = {WorkloadKind::MediaLike};
            cfg.key_bits_sweep = {
                {CipherId::AES, {128, 192, 256}},     {CipherId::BLOWFISH, {32, 64, 128, 448}},
                {CipherId::DES, {56}},                {CipherId::RC2, {40, 64, 128, 1024}},
                {CipherId::RC4, {40, 128, 256, 2048}}, {CipherId::SKIPJACK, {80}},
                {CipherId::TDES, {112, 168}},
            };
            break;
        default:
            throw Error(ErrorCode::ConfigMismatch, "case study must be 1, 2, 3 or 4");
    }
    return cfg;
}

void validate(const CaseStudyConfig& cfg) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ConfigMismatch, "case study " + std::to_string(cfg.study) + ": " + why);
    };
    if (cfg.study < 1 || cfg.study > 4) fail("study must be 1, 2, 3 or 4");
    if (cfg.ciphers.empty()) fail("no ciphers selected");
    if (cfg.reps < 1) fail("reps must be at least 1");
    if (cfg.warmup < 0) fail("warmup must be non-negative");
    if (cfg.sizes.empty()) fail("no sizes given");
    if (cfg.kinds.empty()) fail("no workload kinds given");
    if (std::any_of(cfg.sizes.begin(), cfg.sizes.end(), [](auto s) { return s == 0; })) fail("sizes must be positive");

    switch (cfg.study) {
        case 1:
        case 3:
            if (cfg.sizes.size() != 1) fail("this study holds the size fixed; give exactly one size");
            break;
        case 2:
            if (cfg.kinds.size() != 1) fail("this study holds the data type fixed; give exactly one kind");
            break;
        case 4:
            if (cfg.sizes.size() != 1 || cfg.kinds.size() != 1) fail("the key sweep uses exactly one workload");
            for (auto id : cfg.ciphers) {
                auto it = cfg.key_bits_sweep.find(id);
                if (it == cfg.key_bits_sweep.end() || it->second.empty()) {
                    fail("no key sizes given for " + std::string(to_string(id)));
                }
                for (int bits : it->second) {
                    if (!cipher_info(id).key_sizes_bits.contains(bits)) {
                        fail(std::string(to_string(id)) + " does not support " + std::to_string(bits) + "-bit keys");
                    }
                }
            }
            break;
    }
    if (cfg.study != 4 && !cfg.key_bits_sweep.empty()) fail("key sizes are swept only in study 4");
}

std::vector<BenchmarkSample> run_case_study(const CaseStudyConfig& cfg, const ProgressFn& progress) {
    validate(cfg);

    std::vector<Workload> workloads;
    for (auto kind : cfg.kinds) {
        for (auto size : cfg.sizes) workloads.push_back(generate_workload({kind, size, cfg.seed}));
    }
    std::vector<const Workload*> workload_ptrs;
    for (const auto& w : workloads) workload_ptrs.push_back(&w);

    std::vector<KeyMaterial> keys;
    for (auto id : cfg.ciphers) {
        const std::vector<int> key_sizes =
            cfg.study == 4 ? cfg.key_bits_sweep.at(id) : std::vector<int>{cipher_info(id).key_sizes_bits.minimum()};
        for (int bits : key_sizes) keys.push_back(KeyMaterial::generate(id, bits, cfg.seed));
    }

    std::vector<BenchmarkSample> samples;
    for (auto& r : time_encryption_interleaved(keys, workload_ptrs, cfg.reps, cfg.warmup)) {
        samples.push_back(r.sample);
        if (progress) progress(samples.back());
    }
    return samples;
}

void write_samples_csv(std::ostream& os, const std::vector<BenchmarkSample>& samples) {
    os << "cipher,key_bits,kind,size_bytes,elapsed_ns,rate_mib_s,reps,warmup\n";
    for (const auto& s : samples) {
        char rate[32];
        std::snprintf(rate, sizeof rate, "%.4f", encryption_rate(s));
        os << to_string(s.cipher) << ',' << s.key_bits << ',' << to_string(s.workload_kind) << ',' << s.size_bytes
           << ',' << s.elapsed_ns << ',' << rate << ',' << s.reps << ',' << s.warmup << '\n';
    }
}

void write_samples_jsonl(std::ostream& os, const std::vector<BenchmarkSample>& samples) {
    for (const auto& s : samples) {
        nlohmann::ordered_json j;
        j["cipher"] = to_string(s.cipher);
        j["key_bits"] = s.key_bits;
        j["kind"] = to_string(s.workload_kind);
        j["size_bytes"] = s.size_bytes;
        j["elapsed_ns"] = s.elapsed_ns;
        j["rate_mib_s"] = encryption_rate(s);
        j["reps"] = s.reps;
        j["warmup"] = s.warmup;
        os << j.dump() << '\n';
    }
}

}  // namespace cipherselect
