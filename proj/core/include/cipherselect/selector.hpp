#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cipherselect/cipher.hpp"
#include "cipherselect/profile.hpp"

namespace cipherselect {

enum class RequiredType : std::uint8_t { Any, Block, Stream };

std::string_view to_string(RequiredType t) noexcept;
std::optional<RequiredType> parse_required_type(std::string_view name);

struct SelectionConstraint {
    RequiredType required_type = RequiredType::Any;
    int min_key_bits = 0;
    std::vector<CipherId> allowed_ciphers{kAllCiphers.begin(), kAllCiphers.end()};
    std::uint64_t size_bytes = 1;
};

/// Throws Error(InvalidConstraint) for an empty allow-list, a negative key
/// floor or a zero size.
void validate(const SelectionConstraint& c);

struct Candidate {
    CipherId cipher;
    int key_bits;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// One row of the selection report. `reason` is empty for feasible rows and
/// names the first violated constraint otherwise.
struct RationaleEntry {
    Candidate candidate;
    std::optional<double> predicted_ns;  // absent when there is no fit
    int rank = 0;                        // 1 = winner; 0 when rejected
    std::string reason;
};

struct SelectionDecision {
    CipherId cipher;
    int key_bits;
    std::int64_t predicted_ns;
    std::vector<RationaleEntry> rationale;  // ranked feasible rows, then rejected rows
};

/// Every profiled (cipher, key_bits) pair that satisfies the constraint, in
/// (cipher, key_bits) order. Empty is a valid result.
std::vector<Candidate> candidates(const BenchmarkProfile& profile, const SelectionConstraint& c);

/// Report rows for every fit in the profile plus one row for each allowed
/// cipher the profile never measured. Does not throw on infeasibility.
std::vector<RationaleEntry> evaluate(const BenchmarkProfile& profile, const SelectionConstraint& c);

/// Argmin of predicted time at c.size_bytes over candidates(). Ties go to
/// the larger key, then to the alphabetically first cipher name.
/// Throws Error(NoFeasibleCipher) when no candidate survives.
SelectionDecision select(const BenchmarkProfile& profile, const SelectionConstraint& c);

/// Aligned text table of the rationale followed by a "winner:" line.
std::string explain(const SelectionDecision& d);

/// Same table for a constraint nothing satisfies, ending in "winner: none".
std::string explain_infeasible(const std::vector<RationaleEntry>& rows);

/// Machine-readable form of the decision (single-line JSON).
std::string decision_to_json(const SelectionDecision& d);

}  // namespace cipherselect
