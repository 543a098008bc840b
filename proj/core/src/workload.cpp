#include "cipherselect/workload.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cipherselect/error.hpp"

namespace cipherselect {

std::string_view to_string(WorkloadKind kind) noexcept {
    switch (kind) {
        case WorkloadKind::ZerosSparse: return "zeros_sparse";
        case WorkloadKind::RandomDense: return "random_dense";
        case WorkloadKind::TextAnsi: return "text_ansi";
        case WorkloadKind::TextUtf16: return "text_utf16";
        case WorkloadKind::MediaLike: return "media_like";
    }
    return "?";
}

std::optional<WorkloadKind> parse_workload_kind(std::string_view name) {
    for (auto k : kAllWorkloadKinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

namespace {

constexpr std::size_t kMediaPeriod = 4096;
constexpr std::size_t kMediaZeroRun = 64;

// Byte streams are drawn from mt19937_64 outputs, low byte first. We avoid
// std::uniform_int_distribution because its output is not specified across
// standard library implementations.
class ByteSource {
public:
    explicit ByteSource(std::uint64_t seed) : rng_(seed) {}

    std::uint8_t next() {
        if (left_ == 0) {
            word_ = rng_();
            left_ = 8;
        }
        auto b = static_cast<std::uint8_t>(word_);
        word_ >>= 8;
        --left_;
        return b;
    }

    // Printable ASCII 0x20..0x7E. Rejection sampling keeps it uniform.
    std::uint8_t next_printable() {
        for (;;) {
            std::uint8_t b = next();
            if (b < 190) return static_cast<std::uint8_t>(0x20 + b % 95);
        }
    }

private:
    std::mt19937_64 rng_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

}  // namespace

Workload generate_workload(const WorkloadSpec& spec) {
    if (spec.size_bytes == 0) throw Error(ErrorCode::BadSize, "workload size must be at least one byte");
    Workload w{spec, Bytes(spec.size_bytes, 0)};
    auto& out = w.bytes;
    ByteSource src(spec.seed);

    switch (spec.kind) {
        case WorkloadKind::ZerosSparse:
            break;
        case WorkloadKind::RandomDense:
            for (auto& b : out) b = src.next();
            break;
        case WorkloadKind::TextAnsi:
            for (auto& b : out) b = src.next_printable();
            break;
        case WorkloadKind::TextUtf16:
            for (std::size_t i = 0; i < out.size(); i += 2) out[i] = src.next_printable();
            break;
        case WorkloadKind::MediaLike:
            for (std::size_t i = 0; i < out.size(); ++i) {
                out[i] = (i % kMediaPeriod) < kMediaPeriod - kMediaZeroRun ? src.next() : 0;
            }
            break;
    }
    return w;
}

double estimate_density(ByteView bytes) {
    if (bytes.empty()) throw Error(ErrorCode::EmptyWorkload, "cannot estimate density of an empty buffer");
    std::array<std::uint64_t, 256> counts{};
    for (auto b : bytes) ++counts[b];
    const double n = static_cast<double>(bytes.size());
    double h = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double f = static_cast<double>(c) / n;
        h -= f * std::log2(f);
    }
    // Rounding can leave -0.0 or a hair above 8.
    return std::clamp(h, 0.0, 8.0);
}

}  // namespace cipherselect
