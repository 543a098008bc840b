#include "cipherselect/profile.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "cipherselect/error.hpp"

namespace cipherselect {

using nlohmann::ordered_json;

double LinearFit::predict_ns(std::uint64_t size_bytes) const noexcept {
    return std::max(0.0, slope_ns_per_byte * static_cast<double>(size_bytes) + intercept_ns);
}

const LinearFit* BenchmarkProfile::find_fit(CipherId cipher, int key_bits) const noexcept {
    for (const auto& f : fits) {
        if (f.cipher == cipher && f.key_bits == key_bits) return &f;
    }
    return nullptr;
}

std::vector<LinearFit> fit_profile(const std::vector<BenchmarkSample>& samples) {
    std::map<std::pair<CipherId, int>, std::vector<const BenchmarkSample*>> groups;
    for (const auto& s : samples) groups[{s.cipher, s.key_bits}].push_back(&s);

    std::vector<LinearFit> fits;
    for (const auto& [group, members] : groups) {
        const std::string label = std::string(to_string(group.first)) + "-" + std::to_string(group.second);
        if (members.size() < 2) {
            throw Error(ErrorCode::InsufficientSamples, label + " needs at least two samples to fit");
        }
        const double n = static_cast<double>(members.size());
        double mean_x = 0.0;
        double mean_y = 0.0;
        for (const auto* s : members) {
            mean_x += static_cast<double>(s->size_bytes);
            mean_y += static_cast<double>(s->elapsed_ns);
        }
        mean_x /= n;
        mean_y /= n;

        double sxx = 0.0;
        double sxy = 0.0;
        double syy = 0.0;
        for (const auto* s : members) {
            const double dx = static_cast<double>(s->size_bytes) - mean_x;
            const double dy = static_cast<double>(s->elapsed_ns) - mean_y;
            sxx += dx * dx;
            sxy += dx * dy;
            syy += dy * dy;
        }
        if (sxx == 0.0) throw Error(ErrorCode::DegenerateSizes, label + " has samples at a single size only");

        LinearFit fit;
        fit.cipher = group.first;
        fit.key_bits = group.second;
        fit.slope_ns_per_byte = sxy / sxx;
        fit.intercept_ns = mean_y - fit.slope_ns_per_byte * mean_x;
        fit.n_samples = static_cast<int>(members.size());
        if (!(fit.slope_ns_per_byte > 0.0)) {
            throw Error(ErrorCode::NonPositiveSlope, label + " encryption time does not grow with size");
        }
        // For a least-squares line, SS_res = Syy - Sxy^2 / Sxx.
        fit.r_squared = syy > 0.0 ? std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0) : 1.0;
        fits.push_back(fit);
    }
    return fits;
}

double predict_time(const BenchmarkProfile& profile, CipherId cipher, int key_bits, std::uint64_t size_bytes) {
    const LinearFit* fit = profile.find_fit(cipher, key_bits);
    if (fit == nullptr) {
        throw Error(ErrorCode::NoFitAvailable,
                    "profile has no fit for " + std::string(to_string(cipher)) + "-" + std::to_string(key_bits));
    }
    return fit->predict_ns(size_bytes);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

BenchmarkProfile make_profile(std::vector<BenchmarkSample> samples, std::string host_note) {
    BenchmarkProfile p;
    p.prng_name = std::string(kPrngName);
    p.created_at = utc_timestamp();
    p.host_note = std::move(host_note);
    p.samples = std::move(samples);
    return p;
}

namespace {

[[noreturn]] void schema_error(const std::string& why) { throw Error(ErrorCode::SchemaViolation, why); }

std::string real_to_string(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) schema_error("cannot format real value");
    return std::string(buf, end);
}

double real_from_json(const ordered_json& j, const char* field) {
    if (!j.is_string()) schema_error(std::string(field) + " must be a decimal string");
    const auto& s = j.get_ref<const std::string&>();
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) schema_error(std::string(field) + " is not a number: " + s);
    return v;
}

// Rejects anything outside `allowed` and anything missing from it.
void check_fields(const ordered_json& obj, std::initializer_list<const char*> allowed, const char* what) {
    if (!obj.is_object()) schema_error(std::string(what) + " must be an object");
    std::set<std::string> expected(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!expected.count(key)) schema_error(std::string(what) + " has unknown field '" + key + "'");
    }
    for (const auto& key : expected) {
        if (!obj.contains(key)) schema_error(std::string(what) + " is missing field '" + key + "'");
    }
}

template <class T>
T integer_field(const ordered_json& obj, const char* field) {
    const auto& j = obj.at(field);
    if (!j.is_number_integer()) schema_error(std::string(field) + " must be an integer");
    if constexpr (std::is_unsigned_v<T>) {
        if (!j.is_number_unsigned()) schema_error(std::string(field) + " must be non-negative");
    }
    return j.get<T>();
}

std::string string_field(const ordered_json& obj, const char* field) {
    const auto& j = obj.at(field);
    if (!j.is_string()) schema_error(std::string(field) + " must be a string");
    return j.get<std::string>();
}

CipherId cipher_field(const ordered_json& obj) {
    auto id = parse_cipher_id(string_field(obj, "cipher"));
    if (!id) schema_error("unknown cipher " + obj.at("cipher").dump());
    return *id;
}

}  // namespace

std::string serialize_profile(const BenchmarkProfile& profile) {
    ordered_json root;
    root["version"] = profile.version;
    root["prng_name"] = profile.prng_name;
    root["created_at"] = profile.created_at;
    root["host_note"] = profile.host_note;
    root["samples"] = ordered_json::array();
    for (const auto& s : profile.samples) {
        ordered_json j;
        j["cipher"] = to_string(s.cipher);
        j["key_bits"] = s.key_bits;
        j["workload_kind"] = to_string(s.workload_kind);
        j["size_bytes"] = s.size_bytes;
        j["elapsed_ns"] = s.elapsed_ns;
        j["reps"] = s.reps;
        j["warmup"] = s.warmup;
        root["samples"].push_back(std::move(j));
    }
    root["fits"] = ordered_json::array();
    for (const auto& f : profile.fits) {
        ordered_json j;
        j["cipher"] = to_string(f.cipher);
        j["key_bits"] = f.key_bits;
        j["slope_ns_per_byte"] = real_to_string(f.slope_ns_per_byte);
        j["intercept_ns"] = real_to_string(f.intercept_ns);
        j["r_squared"] = real_to_string(f.r_squared);
        j["n_samples"] = f.n_samples;
        root["fits"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

BenchmarkProfile parse_profile(std::string_view text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        schema_error(std::string("profile is not valid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("version")) schema_error("profile has no version field");
    if (!root.at("version").is_number_integer() || root.at("version").get<long long>() != kProfileVersion) {
        schema_error("unsupported profile version " + root.at("version").dump());
    }
    check_fields(root, {"version", "prng_name", "created_at", "host_note", "samples", "fits"}, "profile");

    BenchmarkProfile p;
    p.version = kProfileVersion;
    p.prng_name = string_field(root, "prng_name");
    p.created_at = string_field(root, "created_at");
    p.host_note = string_field(root, "host_note");

    if (!root.at("samples").is_array()) schema_error("samples must be an array");
    for (const auto& j : root.at("samples")) {
        check_fields(j, {"cipher", "key_bits", "workload_kind", "size_bytes", "elapsed_ns", "reps", "warmup"},
                     "sample");
        BenchmarkSample s;
        s.cipher = cipher_field(j);
        s.key_bits = integer_field<int>(j, "key_bits");
        auto kind = parse_workload_kind(string_field(j, "workload_kind"));
        if (!kind) schema_error("unknown workload kind " + j.at("workload_kind").dump());
        s.workload_kind = *kind;
        s.size_bytes = integer_field<std::uint64_t>(j, "size_bytes");
        s.elapsed_ns = integer_field<std::int64_t>(j, "elapsed_ns");
        s.reps = integer_field<int>(j, "reps");
        s.warmup = integer_field<int>(j, "warmup");
        if (s.elapsed_ns <= 0) schema_error("sample elapsed_ns must be positive");
        p.samples.push_back(s);
    }

    if (!root.at("fits").is_array()) schema_error("fits must be an array");
    std::set<std::pair<CipherId, int>> seen;
    for (const auto& j : root.at("fits")) {
        check_fields(j, {"cipher", "key_bits", "slope_ns_per_byte", "intercept_ns", "r_squared", "n_samples"},
                     "fit");
        LinearFit f;
        f.cipher = cipher_field(j);
        f.key_bits = integer_field<int>(j, "key_bits");
        f.slope_ns_per_byte = real_from_json(j.at("slope_ns_per_byte"), "slope_ns_per_byte");
        f.intercept_ns = real_from_json(j.at("intercept_ns"), "intercept_ns");
        f.r_squared = real_from_json(j.at("r_squared"), "r_squared");
        f.n_samples = integer_field<int>(j, "n_samples");
        if (!(f.slope_ns_per_byte > 0.0)) schema_error("fit slope must be positive");
        if (f.n_samples < 2) schema_error("fit n_samples must be at least 2");
        if (!(f.r_squared >= 0.0 && f.r_squared <= 1.0)) schema_error("fit r_squared must lie in [0, 1]");
        if (!seen.insert({f.cipher, f.key_bits}).second) schema_error("duplicate fit for one (cipher, key_bits)");
        p.fits.push_back(f);
    }
    return p;
}

void save_profile(const BenchmarkProfile& profile, const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + destination.string() + " for writing");
    out << serialize_profile(profile);
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "failed writing " + destination.string());
}

BenchmarkProfile load_profile(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + source.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoFailure, "failed reading " + source.string());
    return parse_profile(buf.str());
}

}  // namespace cipherselect
