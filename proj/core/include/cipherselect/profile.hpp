#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cipherselect/bench.hpp"
#include "cipherselect/cipher.hpp"

namespace cipherselect {

/// Affine time model elapsed_ns = slope * size_bytes + intercept for one
/// (cipher, key bits) pair, fitted by ordinary least squares.
struct LinearFit {
    CipherId cipher = CipherId::AES;
    int key_bits = 0;
    double slope_ns_per_byte = 0.0;
    double intercept_ns = 0.0;
    double r_squared = 0.0;
    int n_samples = 0;

    /// slope * size + intercept, clamped at zero.
    double predict_ns(std::uint64_t size_bytes) const noexcept;

    friend bool operator==(const LinearFit&, const LinearFit&) = default;
};

inline constexpr int kProfileVersion = 1;

struct BenchmarkProfile {
    int version = kProfileVersion;
    std::string prng_name;
    std::string created_at;  // ISO 8601, UTC
    std::string host_note;
    std::vector<BenchmarkSample> samples;
    std::vector<LinearFit> fits;  // at most one per (cipher, key_bits)

    /// nullptr when no fit exists for the pair.
    const LinearFit* find_fit(CipherId cipher, int key_bits) const noexcept;

    friend bool operator==(const BenchmarkProfile&, const BenchmarkProfile&) = default;
};

/// One fit per (cipher, key_bits) group, ordered by cipher then key bits.
///
/// Throws Error(InsufficientSamples) when a group has fewer than two
/// samples, Error(DegenerateSizes) when all its sizes coincide, and
/// Error(NonPositiveSlope) when time does not grow with size.
std::vector<LinearFit> fit_profile(const std::vector<BenchmarkSample>& samples);

/// Throws Error(NoFitAvailable) when the profile has no fit for the pair.
double predict_time(const BenchmarkProfile& profile, CipherId cipher, int key_bits, std::uint64_t size_bytes);

/// Current UTC time as "YYYY-MM-DDThh:mm:ssZ".
std::string utc_timestamp();

/// New profile stamped with the PRNG name and current time, holding the
/// given samples and no fits.
BenchmarkProfile make_profile(std::vector<BenchmarkSample> samples, std::string host_note = {});

/// JSON text. Reals are written as shortest round-trip decimal strings so
/// parse(serialize(p)) == p exactly.
std::string serialize_profile(const BenchmarkProfile& profile);

/// Throws Error(SchemaViolation) on malformed JSON, a version other than
/// kProfileVersion, missing fields, or fields the schema does not define.
BenchmarkProfile parse_profile(std::string_view text);

/// Throws Error(IoFailure) when the file cannot be written or read.
void save_profile(const BenchmarkProfile& profile, const std::filesystem::path& destination);
BenchmarkProfile load_profile(const std::filesystem::path& source);

}  // namespace cipherselect
