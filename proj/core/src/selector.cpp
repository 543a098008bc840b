#include "cipherselect/selector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "cipherselect/error.hpp"

namespace cipherselect {

std::string_view to_string(RequiredType t) noexcept {
    switch (t) {
        case RequiredType::Any: return "any";
        case RequiredType::Block: return "block";
        case RequiredType::Stream: return "stream";
    }
    return "?";
}

std::optional<RequiredType> parse_required_type(std::string_view name) {
    for (auto t : {RequiredType::Any, RequiredType::Block, RequiredType::Stream}) {
        if (to_string(t) == name) return t;
    }
    return std::nullopt;
}

void validate(const SelectionConstraint& c) {
    if (c.allowed_ciphers.empty()) throw Error(ErrorCode::InvalidConstraint, "allowed cipher set is empty");
    if (c.min_key_bits < 0) throw Error(ErrorCode::InvalidConstraint, "minimum key bits must be non-negative");
    if (c.size_bytes == 0) throw Error(ErrorCode::InvalidConstraint, "payload size must be positive");
}

namespace {

bool is_allowed(const SelectionConstraint& c, CipherId id) {
    return std::find(c.allowed_ciphers.begin(), c.allowed_ciphers.end(), id) != c.allowed_ciphers.end();
}

// Empty when the pair satisfies the constraint.
std::string violation(const SelectionConstraint& c, CipherId id, int key_bits) {
    if (!is_allowed(c, id)) return "not in allowed set";
    const CipherType type = cipher_info(id).type;
    if (c.required_type == RequiredType::Block && type != CipherType::Block) return "not a block cipher";
    if (c.required_type == RequiredType::Stream && type != CipherType::Stream) return "not a stream cipher";
    if (key_bits < c.min_key_bits) {
        return "key " + std::to_string(key_bits) + " < min " + std::to_string(c.min_key_bits) + " bits";
    }
    return {};
}

// Strict weak order: faster first, then larger key, then cipher name.
bool better(const RationaleEntry& a, const RationaleEntry& b) {
    if (*a.predicted_ns != *b.predicted_ns) return *a.predicted_ns < *b.predicted_ns;
    if (a.candidate.key_bits != b.candidate.key_bits) return a.candidate.key_bits > b.candidate.key_bits;
    return a.candidate.cipher < b.candidate.cipher;
}

}  // namespace

std::vector<Candidate> candidates(const BenchmarkProfile& profile, const SelectionConstraint& c) {
    validate(c);
    std::vector<Candidate> out;
    for (const auto& f : profile.fits) {
        if (violation(c, f.cipher, f.key_bits).empty()) out.push_back({f.cipher, f.key_bits});
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        return a.cipher != b.cipher ? a.cipher < b.cipher : a.key_bits < b.key_bits;
    });
    return out;
}

std::vector<RationaleEntry> evaluate(const BenchmarkProfile& profile, const SelectionConstraint& c) {
    validate(c);
    std::vector<RationaleEntry> feasible;
    std::vector<RationaleEntry> rejected;
    for (const auto& f : profile.fits) {
        RationaleEntry e{{f.cipher, f.key_bits}, f.predict_ns(c.size_bytes), 0, violation(c, f.cipher, f.key_bits)};
        (e.reason.empty() ? feasible : rejected).push_back(std::move(e));
    }
    for (auto id : kAllCiphers) {
        const bool profiled = std::any_of(profile.fits.begin(), profile.fits.end(),
                                          [&](const LinearFit& f) { return f.cipher == id; });
        if (!profiled && is_allowed(c, id)) rejected.push_back({{id, 0}, std::nullopt, 0, "no fit in profile"});
    }

    std::sort(feasible.begin(), feasible.end(), better);
    for (std::size_t i = 0; i < feasible.size(); ++i) feasible[i].rank = static_cast<int>(i + 1);
    std::sort(rejected.begin(), rejected.end(), [](const RationaleEntry& a, const RationaleEntry& b) {
        return a.candidate.cipher != b.candidate.cipher ? a.candidate.cipher < b.candidate.cipher
                                                        : a.candidate.key_bits < b.candidate.key_bits;
    });
    feasible.insert(feasible.end(), std::make_move_iterator(rejected.begin()),
                    std::make_move_iterator(rejected.end()));
    return feasible;
}

SelectionDecision select(const BenchmarkProfile& profile, const SelectionConstraint& c) {
    auto rows = evaluate(profile, c);
    if (rows.empty() || rows.front().rank != 1) {
        throw Error(ErrorCode::NoFeasibleCipher, "no profiled cipher satisfies the constraint");
    }
    const auto& win = rows.front();
    return SelectionDecision{win.candidate.cipher, win.candidate.key_bits, std::llround(*win.predicted_ns),
                             std::move(rows)};
}

namespace {

std::string format_ns(std::optional<double> ns) {
    return ns ? std::to_string(std::llround(*ns)) : "-";
}

std::string render(const std::vector<RationaleEntry>& rows) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-4s  %-9s  %8s  %16s  %s\n", "rank", "cipher", "key_bits", "predicted_ns",
                  "status");
    os << line;
    for (const auto& r : rows) {
        const std::string rank = r.rank > 0 ? std::to_string(r.rank) : "-";
        const std::string bits = r.candidate.key_bits > 0 ? std::to_string(r.candidate.key_bits) : "-";
        const std::string status = r.reason.empty() ? (r.rank == 1 ? "selected" : "feasible") : "rejected: " + r.reason;
        std::snprintf(line, sizeof line, "%-4s  %-9s  %8s  %16s  %s\n", rank.c_str(),
                      std::string(to_string(r.candidate.cipher)).c_str(), bits.c_str(),
                      format_ns(r.predicted_ns).c_str(), status.c_str());
        os << line;
    }
    return os.str();
}

}  // namespace

std::string explain(const SelectionDecision& d) {
    return render(d.rationale) + "winner: " + std::string(to_string(d.cipher)) + " " + std::to_string(d.key_bits) +
           " bits, predicted " + std::to_string(d.predicted_ns) + " ns\n";
}

std::string explain_infeasible(const std::vector<RationaleEntry>& rows) { return render(rows) + "winner: none\n"; }

std::string decision_to_json(const SelectionDecision& d) {
    nlohmann::ordered_json j;
    j["cipher"] = to_string(d.cipher);
    j["key_bits"] = d.key_bits;
    j["predicted_ns"] = d.predicted_ns;
    j["rationale"] = nlohmann::ordered_json::array();
    for (const auto& r : d.rationale) {
        nlohmann::ordered_json row;
        row["cipher"] = to_string(r.candidate.cipher);
        row["key_bits"] = r.candidate.key_bits;
        row["predicted_ns"] = r.predicted_ns ? nlohmann::ordered_json(std::llround(*r.predicted_ns)) : nullptr;
        row["rank"] = r.rank;
        row["reason"] = r.reason.empty() ? (r.rank == 1 ? "selected" : "feasible") : r.reason;
        j["rationale"].push_back(std::move(row));
    }
    return j.dump();
}

}  // namespace cipherselect
