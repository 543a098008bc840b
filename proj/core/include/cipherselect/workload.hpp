#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "cipherselect/bytes.hpp"

namespace cipherselect {

/// Byte-level stand-ins for the file types a benchmark would encrypt.
enum class WorkloadKind : std::uint8_t { ZerosSparse, RandomDense, TextAnsi, TextUtf16, MediaLike };

inline constexpr std::array<WorkloadKind, 5> kAllWorkloadKinds = {
    WorkloadKind::ZerosSparse, WorkloadKind::RandomDense, WorkloadKind::TextAnsi,
    WorkloadKind::TextUtf16,   WorkloadKind::MediaLike,
};

std::string_view to_string(WorkloadKind kind) noexcept;
std::optional<WorkloadKind> parse_workload_kind(std::string_view name);

/// Name of the generator behind every seeded workload and key. Recorded in
/// saved profiles so runs can be reproduced.
inline constexpr std::string_view kPrngName = "mt19937_64";

struct WorkloadSpec {
    WorkloadKind kind = WorkloadKind::RandomDense;
    std::uint64_t size_bytes = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const WorkloadSpec&, const WorkloadSpec&) = default;
};

struct Workload {
    WorkloadSpec spec;
    Bytes bytes;
};

/// Pure function of the spec. Throws Error(BadSize) when size_bytes is 0.
///
///  - ZerosSparse: all 0x00.
///  - RandomDense: uniform bytes from the seeded generator.
///  - TextAnsi: uniform draws from the 95 printable ASCII characters.
///  - TextUtf16: TextAnsi characters as UTF-16LE (each followed by 0x00).
///  - MediaLike: random bytes with a 64-byte zero run every 4 KiB, a crude
///    stand-in for compressed media with container padding.
Workload generate_workload(const WorkloadSpec& spec);

/// Shannon entropy of the byte histogram in bits per byte, in [0, 8].
/// Throws Error(EmptyWorkload) on empty input.
double estimate_density(ByteView bytes);
inline double estimate_density(const Workload& w) { return estimate_density(ByteView(w.bytes)); }

}  // namespace cipherselect
