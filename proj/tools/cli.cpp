#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cipherselect/bench.hpp"
#include "cipherselect/error.hpp"
#include "cipherselect/kat.hpp"
#include "cipherselect/mode.hpp"
#include "cipherselect/profile.hpp"
#include "cipherselect/selector.hpp"
#include "cipherselect/workload.hpp"

namespace cipherselect::cli {

namespace {

constexpr const char* kEcbWarning =
    "warning: ECB mode leaks repeated-block structure and these ciphers are not constant time; "
    "do not use this output to protect real data\n";

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NoFeasibleCipher: return kInfeasible;
        case ErrorCode::IoFailure:
        case ErrorCode::SchemaViolation:
        case ErrorCode::NoFitAvailable:
        case ErrorCode::InsufficientSamples:
        case ErrorCode::DegenerateSizes:
        case ErrorCode::NonPositiveSlope:
        case ErrorCode::CorruptPadding:
        case ErrorCode::WrongLength:
            return kIoOrSchema;
        default:
            return kUsage;
    }
}

std::vector<CipherId> parse_ciphers(const std::vector<std::string>& names) {
    std::vector<CipherId> out;
    for (const auto& n : names) {
        auto id = parse_cipher_id(n);
        if (!id) throw Error(ErrorCode::BadArgument, "unknown cipher '" + n + "'");
        if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    }
    return out;
}

std::vector<WorkloadKind> parse_kinds(const std::vector<std::string>& names) {
    std::vector<WorkloadKind> out;
    for (const auto& n : names) {
        auto k = parse_workload_kind(n);
        if (!k) throw Error(ErrorCode::BadArgument, "unknown workload kind '" + n + "'");
        out.push_back(*k);
    }
    return out;
}

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorCode::IoFailure, "failed reading " + path);
    return data;
}

void write_file(const std::string& path, ByteView data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(ErrorCode::IoFailure, "failed writing " + path);
}

// "@path" reads the hex key from a file.
Bytes parse_key(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        const Bytes raw = read_file(arg.substr(1));
        return from_hex(std::string(raw.begin(), raw.end()));
    }
    return from_hex(arg);
}

std::string format_fixed(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

void write_samples_table(std::ostream& os, const std::vector<BenchmarkSample>& samples) {
    os << std::left << std::setw(9) << "cipher" << std::right << std::setw(9) << "key_bits" << "  " << std::left
       << std::setw(13) << "kind" << std::right << std::setw(12) << "size_bytes" << std::setw(14) << "elapsed_ms"
       << std::setw(12) << "MiB/s" << '\n';
    for (const auto& s : samples) {
        os << std::left << std::setw(9) << to_string(s.cipher) << std::right << std::setw(9) << s.key_bits << "  "
           << std::left << std::setw(13) << to_string(s.workload_kind) << std::right << std::setw(12) << s.size_bytes
           << std::setw(14) << format_fixed(static_cast<double>(s.elapsed_ns) / 1e6, 3) << std::setw(12)
           << format_fixed(encryption_rate(s), 2) << '\n';
    }
}

// Profile as a grid shaped like a timing table: one row per (kind, size),
// one column per (cipher, key bits), cells in milliseconds.
void write_report(std::ostream& os, const BenchmarkProfile& p, const std::string& format) {
    std::set<std::pair<CipherId, int>> columns;
    std::set<std::pair<WorkloadKind, std::uint64_t>> rows;
    std::map<std::tuple<WorkloadKind, std::uint64_t, CipherId, int>, std::int64_t> cells;
    for (const auto& s : p.samples) {
        columns.insert({s.cipher, s.key_bits});
        rows.insert({s.workload_kind, s.size_bytes});
        cells[{s.workload_kind, s.size_bytes, s.cipher, s.key_bits}] = s.elapsed_ns;
    }
    auto header = [](const std::pair<CipherId, int>& c) {
        return std::string(to_string(c.first)) + "-" + std::to_string(c.second);
    };
    auto cell = [&](const auto& r, const auto& c) -> std::string {
        auto it = cells.find({r.first, r.second, c.first, c.second});
        return it == cells.end() ? "" : format_fixed(static_cast<double>(it->second) / 1e6, 3);
    };
    const double mib = 1024.0 * 1024.0;

    if (format == "csv") {
        os << "kind,size_mib";
        for (const auto& c : columns) os << ',' << header(c) << "_ms";
        os << '\n';
        for (const auto& r : rows) {
            os << to_string(r.first) << ',' << format_fixed(static_cast<double>(r.second) / mib, 3);
            for (const auto& c : columns) os << ',' << cell(r, c);
            os << '\n';
        }
        return;
    }
    os << "Encryption time (ms)\n";
    os << std::left << std::setw(13) << "kind" << std::right << std::setw(10) << "size_MiB";
    for (const auto& c : columns) os << std::setw(14) << header(c);
    os << '\n';
    for (const auto& r : rows) {
        os << std::left << std::setw(13) << to_string(r.first) << std::right << std::setw(10)
           << format_fixed(static_cast<double>(r.second) / mib, 3);
        for (const auto& c : columns) os << std::setw(14) << cell(r, c);
        os << '\n';
    }
    if (!p.fits.empty()) {
        os << "\nLinear fits\n";
        for (const auto& f : p.fits) {
            os << std::left << std::setw(14) << header({f.cipher, f.key_bits}) << std::right
               << " rate " << std::setw(10) << format_fixed(1e9 / (f.slope_ns_per_byte * mib), 2) << " MiB/s"
               << "  intercept " << std::setw(12) << format_fixed(f.intercept_ns / 1e6, 3) << " ms"
               << "  r2 " << format_fixed(f.r_squared, 5) << "  n " << f.n_samples << '\n';
        }
    }
}

struct Options {
    std::vector<std::string> ciphers;
    std::vector<std::uint64_t> sizes;
    std::vector<std::string> kinds;
    std::vector<int> key_bits;
    int reps = kDefaultReps;
    int warmup = kDefaultWarmup;
    std::uint64_t seed = 1;
    int case_study = 2;
    std::string profile;
    std::uint64_t size = 0;
    std::string require = "any";
    int min_key_bits = 0;
    std::vector<std::string> allow;
    std::string in;
    std::string out;
    std::string key_hex;
    std::string format;
    std::string host_note;
};

int cmd_kat(std::ostream& out) {
    int failures = 0;
    for (const auto& r : run_known_answer_tests()) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) out << "  expected " << r.expected_hex << " got " << r.actual_hex;
        out << '\n';
        failures += r.passed ? 0 : 1;
    }
    return failures == 0 ? kOk : kKatFailure;
}

int cmd_gen(const Options& o, std::ostream& out) {
    if (o.kinds.size() != 1) throw Error(ErrorCode::BadArgument, "gen needs exactly one --kinds value");
    if (o.out.empty()) throw Error(ErrorCode::BadArgument, "gen needs --out");
    const WorkloadKind kind = parse_kinds(o.kinds).front();
    const Workload w = generate_workload({kind, o.size, o.seed});
    write_file(o.out, w.bytes);
    out << "wrote " << w.bytes.size() << " bytes of " << to_string(kind) << " (seed " << o.seed << ", density "
        << format_fixed(estimate_density(w), 4) << " bits/byte) to " << o.out << '\n';
    return kOk;
}

CaseStudyConfig bench_config(const Options& o, const CLI::App& sub) {
    CaseStudyConfig cfg = default_case_study(o.case_study);
    if (sub.count("--ciphers")) cfg.ciphers = parse_ciphers(o.ciphers);
    if (sub.count("--sizes")) cfg.sizes = o.sizes;
    if (sub.count("--kinds")) cfg.kinds = parse_kinds(o.kinds);
    cfg.reps = o.reps;
    cfg.warmup = o.warmup;
    cfg.seed = o.seed;
    if (sub.count("--key-bits")) {
        if (cfg.study != 4) throw Error(ErrorCode::ConfigMismatch, "--key-bits applies to --case-study 4 only");
        cfg.key_bits_sweep.clear();
        for (auto id : cfg.ciphers) {
            std::vector<int> supported;
            for (int b : o.key_bits) {
                if (cipher_info(id).key_sizes_bits.contains(b)) supported.push_back(b);
            }
            if (supported.empty()) {
                throw Error(ErrorCode::ConfigMismatch,
                            "none of the --key-bits values are valid for " + std::string(to_string(id)));
            }
            cfg.key_bits_sweep[id] = supported;
        }
    }
    return cfg;
}

int cmd_bench(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    const CaseStudyConfig cfg = bench_config(o, sub);
    const std::string format = o.format.empty() ? "csv" : o.format;
    auto samples = run_case_study(cfg, [&](const BenchmarkSample& s) {
        err << "  " << to_string(s.cipher) << "-" << s.key_bits << " " << to_string(s.workload_kind) << " "
            << s.size_bytes << " B: " << format_fixed(static_cast<double>(s.elapsed_ns) / 1e6, 3) << " ms\n";
    });

    std::ostringstream buf;
    if (format == "jsonl") {
        write_samples_jsonl(buf, samples);
    } else if (format == "txt") {
        write_samples_table(buf, samples);
    } else {
        write_samples_csv(buf, samples);
    }
    if (o.out.empty()) {
        out << buf.str();
    } else {
        const std::string text = buf.str();
        write_file(o.out, as_bytes(text));
    }
    if (!o.profile.empty()) {
        save_profile(make_profile(std::move(samples), o.host_note), o.profile);
        err << "profile written to " << o.profile << '\n';
    }
    return kOk;
}

int cmd_fit(const Options& o, std::ostream& out) {
    if (o.profile.empty()) throw Error(ErrorCode::BadArgument, "fit needs --profile");
    BenchmarkProfile p = load_profile(o.profile);
    p.fits = fit_profile(p.samples);
    const std::string dest = o.out.empty() ? o.profile : o.out;
    save_profile(p, dest);
    for (const auto& f : p.fits) {
        out << to_string(f.cipher) << "-" << f.key_bits << ": slope " << f.slope_ns_per_byte << " ns/B, intercept "
            << format_fixed(f.intercept_ns, 0) << " ns, r2 " << format_fixed(f.r_squared, 6) << ", n "
            << f.n_samples << '\n';
    }
    out << "fitted profile written to " << dest << '\n';
    return kOk;
}

int cmd_select(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    if (o.profile.empty()) throw Error(ErrorCode::BadArgument, "select needs --profile");
    SelectionConstraint c;
    auto req = parse_required_type(o.require);
    if (!req) throw Error(ErrorCode::BadArgument, "--require must be any, block or stream");
    c.required_type = *req;
    c.min_key_bits = o.min_key_bits;
    if (sub.count("--allow")) c.allowed_ciphers = parse_ciphers(o.allow);
    c.size_bytes = o.size;
    const BenchmarkProfile p = load_profile(o.profile);
    validate(c);

    const auto rows = evaluate(p, c);
    if (rows.empty() || rows.front().rank != 1) {
        out << explain_infeasible(rows);
        err << "error: no profiled cipher satisfies the constraint\n";
        return kInfeasible;
    }
    const SelectionDecision d = select(p, c);
    if (o.format == "jsonl" || o.format == "json") {
        out << decision_to_json(d) << '\n';
    } else {
        out << explain(d);
    }
    return kOk;
}

int cmd_crypt(const Options& o, bool encrypt, std::ostream& out, std::ostream& err) {
    if (o.ciphers.size() != 1) throw Error(ErrorCode::BadArgument, "give exactly one cipher with --ciphers");
    if (o.in.empty() || o.out.empty()) throw Error(ErrorCode::BadArgument, "--in and --out are required");
    const CipherId id = parse_ciphers(o.ciphers).front();
    err << kEcbWarning;
    CipherState state = make_cipher_state(KeyMaterial::from_bytes(id, parse_key(o.key_hex)));
    const Bytes input = read_file(o.in);
    const Bytes result = encrypt ? ecb_encrypt(state, input) : ecb_decrypt(state, input);
    write_file(o.out, result);
    out << (encrypt ? "encrypted " : "decrypted ") << input.size() << " -> " << result.size() << " bytes with "
        << to_string(id) << "-" << state.key_bits() << '\n';
    return kOk;
}

int cmd_report(const Options& o, std::ostream& out) {
    if (o.profile.empty()) throw Error(ErrorCode::BadArgument, "report needs --profile");
    write_report(out, load_profile(o.profile), o.format.empty() ? "txt" : o.format);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric cipher benchmarking and selection"};
    app.name("cipherselect");
    app.require_subcommand(1);
    Options o;

    auto* kat = app.add_subcommand("kat", "Run the known-answer tests for every cipher");

    auto* gen = app.add_subcommand("gen", "Write a synthetic workload file (raw bytes)");
    gen->add_option("--kinds", o.kinds, "Workload kind")->required();
    gen->add_option("--size", o.size, "Size in bytes")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", o.seed, "Generator seed");
    gen->add_option("--out", o.out, "Output path")->required();

    auto* bench = app.add_subcommand("bench", "Time encryption for a case-study grid");
    bench->add_option("--case-study", o.case_study, "Scenario 1-4 (default 2)")->check(CLI::Range(1, 4));
    bench->add_option("--ciphers", o.ciphers, "Ciphers to run")->delimiter(',');
    bench->add_option("--sizes", o.sizes, "Workload sizes in bytes")->delimiter(',');
    bench->add_option("--kinds", o.kinds, "Workload kinds")->delimiter(',');
    bench->add_option("--key-bits", o.key_bits, "Key sizes to sweep (case study 4)")->delimiter(',');
    bench->add_option("--reps", o.reps, "Timed repetitions per sample")->check(CLI::PositiveNumber);
    bench->add_option("--warmup", o.warmup, "Untimed warmup runs")->check(CLI::NonNegativeNumber);
    bench->add_option("--seed", o.seed, "Workload and key seed");
    bench->add_option("--format", o.format, "csv, jsonl or txt")->check(CLI::IsMember({"csv", "jsonl", "txt"}));
    bench->add_option("--out", o.out, "Write samples here instead of stdout");
    bench->add_option("--profile", o.profile, "Also save a profile (samples only) here");
    bench->add_option("--host-note", o.host_note, "Free text stored in the profile");

    auto* fit = app.add_subcommand("fit", "Fit linear time models to a profile's samples");
    fit->add_option("--profile", o.profile, "Profile to read")->required();
    fit->add_option("--out", o.out, "Write the fitted profile here (default: in place)");

    auto* sel = app.add_subcommand("select", "Pick the fastest cipher meeting the constraints");
    sel->add_option("--profile", o.profile, "Fitted profile")->required();
    sel->add_option("--size", o.size, "Payload size in bytes")->required()->check(CLI::PositiveNumber);
    sel->add_option("--require", o.require, "any, block or stream");
    sel->add_option("--min-key-bits", o.min_key_bits, "Smallest acceptable key")->check(CLI::NonNegativeNumber);
    sel->add_option("--allow", o.allow, "Restrict to these ciphers")->delimiter(',');
    sel->add_option("--format", o.format, "txt or jsonl")->check(CLI::IsMember({"txt", "jsonl", "json"}));

    auto add_crypt_options = [&](CLI::App* c) {
        c->add_option("--ciphers", o.ciphers, "Cipher")->required();
        c->add_option("--key-hex", o.key_hex, "Key as hex, or @file holding hex")->required();
        c->add_option("--in", o.in, "Input file")->required();
        c->add_option("--out", o.out, "Output file")->required();
    };
    auto* enc = app.add_subcommand("encrypt", "ECB/PKCS#7 encrypt a file (RC4: plain stream)");
    add_crypt_options(enc);
    auto* dec = app.add_subcommand("decrypt", "Inverse of encrypt");
    add_crypt_options(dec);

    auto* report = app.add_subcommand("report", "Render a profile as a size-by-cipher timing table");
    report->add_option("--profile", o.profile, "Profile to render")->required();
    report->add_option("--format", o.format, "txt or csv")->check(CLI::IsMember({"txt", "csv"}));

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("cipherselect");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (kat->parsed()) return cmd_kat(out);
        if (gen->parsed()) return cmd_gen(o, out);
        if (bench->parsed()) return cmd_bench(o, *bench, out, err);
        if (fit->parsed()) return cmd_fit(o, out);
        if (sel->parsed()) return cmd_select(o, *sel, out, err);
        if (enc->parsed()) return cmd_crypt(o, true, out, err);
        if (dec->parsed()) return cmd_crypt(o, false, out, err);
        if (report->parsed()) return cmd_report(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace cipherselect::cli
