#include "cipherselect/cipher.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <string>

#include "cipherselect/error.hpp"

namespace cipherselect {

std::string_view to_string(CipherId id) noexcept {
    switch (id) {
        case CipherId::AES: return "AES";
        case CipherId::BLOWFISH: return "BLOWFISH";
        case CipherId::DES: return "DES";
        case CipherId::RC2: return "RC2";
        case CipherId::RC4: return "RC4";
        case CipherId::SKIPJACK: return "SKIPJACK";
        case CipherId::TDES: return "TDES";
    }
    return "?";
}

std::string_view to_string(CipherType type) noexcept { return type == CipherType::Block ? "block" : "stream"; }

std::optional<CipherId> parse_cipher_id(std::string_view name) {
    std::string upper;
    for (char c : name) {
        if (c == '-' || c == '_') continue;
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (upper == "3DES" || upper == "TRIPLEDES") return CipherId::TDES;
    for (auto id : kAllCiphers) {
        if (to_string(id) == upper) return id;
    }
    return std::nullopt;
}

bool KeySizes::contains(int bits) const noexcept {
    if (!listed.empty()) return std::find(listed.begin(), listed.end(), bits) != listed.end();
    return bits >= range_min && bits <= range_max && (bits - range_min) % range_step == 0;
}

int KeySizes::minimum() const noexcept {
    return listed.empty() ? range_min : *std::min_element(listed.begin(), listed.end());
}

int KeySizes::maximum() const noexcept {
    return listed.empty() ? range_max : *std::max_element(listed.begin(), listed.end());
}

std::vector<int> KeySizes::values() const {
    if (!listed.empty()) return listed;
    std::vector<int> out;
    for (int b = range_min; b <= range_max; b += range_step) out.push_back(b);
    return out;
}

namespace {

KeySizes listed(std::vector<int> v) { return KeySizes{std::move(v), 0, 0, 0}; }
KeySizes ranged(int lo, int hi) { return KeySizes{{}, lo, hi, 8}; }

const std::vector<CipherInfo>& registry() {
    static const std::vector<CipherInfo> table = {
        {CipherId::AES, "AES", "Substitution-permutation network", CipherType::Block, 128, {10, 12, 14},
         listed({128, 192, 256})},
        {CipherId::BLOWFISH, "BLOWFISH", "Feistel network", CipherType::Block, 64, {16}, ranged(32, 448)},
        {CipherId::DES, "DES", "Balanced Feistel network", CipherType::Block, 64, {16}, listed({56})},
        {CipherId::RC2, "RC2", "Source-heavy Feistel network", CipherType::Block, 64, {18}, ranged(40, 1024)},
        // "Rounds" for RC4 counts key-scheduling iterations.
        {CipherId::RC4, "RC4", "----", CipherType::Stream, 0, {256}, ranged(40, 2048)},
        {CipherId::SKIPJACK, "SKIPJACK", "Unbalanced Feistel network", CipherType::Block, 64, {32}, listed({80})},
        {CipherId::TDES, "TDES", "Feistel network", CipherType::Block, 64, {48}, listed({112, 168})},
    };
    return table;
}

}  // namespace

const CipherInfo& cipher_info(CipherId id) { return registry().at(static_cast<std::size_t>(id)); }

std::size_t key_bytes_for(CipherId id, int key_bits) {
    if (!cipher_info(id).key_sizes_bits.contains(key_bits)) {
        throw Error(ErrorCode::UnsupportedKeySize,
                    std::string(to_string(id)) + " does not support " + std::to_string(key_bits) + "-bit keys");
    }
    if (id == CipherId::DES || id == CipherId::TDES) return static_cast<std::size_t>(key_bits / 7);
    return static_cast<std::size_t>(key_bits / 8);
}

KeyMaterial KeyMaterial::from_bytes(CipherId cipher, Bytes key) {
    int bits = static_cast<int>(key.size()) * 8;
    if (cipher == CipherId::DES || cipher == CipherId::TDES) bits = static_cast<int>(key.size()) * 7;
    return KeyMaterial{cipher, std::move(key), bits};
}

KeyMaterial KeyMaterial::generate(CipherId cipher, int key_bits, std::uint64_t seed) {
    const std::size_t n = key_bytes_for(cipher, key_bits);
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(cipher) + 1)));
    Bytes key(n);
    for (auto& b : key) b = static_cast<std::uint8_t>(rng() >> 56);
    return KeyMaterial{cipher, std::move(key), key_bits};
}

CipherState::CipherState(CipherId id, int key_bits, Schedule schedule)
    : id_(id), key_bits_(key_bits), schedule_(std::move(schedule)) {}

std::size_t CipherState::block_bytes() const noexcept {
    return static_cast<std::size_t>(cipher_info(id_).block_bytes());
}

namespace {

template <class Fn>
void visit_block_cipher(const CipherState::Schedule& schedule, Fn&& fn) {
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ciphers::Rc4>) {
                throw Error(ErrorCode::StreamCipherMisuse, "RC4 is a stream cipher; use rc4_apply");
            } else {
                fn(c);
            }
        },
        schedule);
}

void check_whole_blocks(ByteView in, MutableByteView out, std::size_t block) {
    if (in.size() % block != 0) throw Error(ErrorCode::WrongBlockLength, "input is not a whole number of blocks");
    if (out.size() < in.size()) throw Error(ErrorCode::WrongLength, "output buffer too small");
}

}  // namespace

void CipherState::encrypt_blocks(ByteView in, MutableByteView out) const {
    visit_block_cipher(schedule_, [&](const auto& c) {
        constexpr std::size_t bs = std::decay_t<decltype(c)>::kBlockBytes;
        check_whole_blocks(in, out, bs);
        const std::uint8_t* src = in.data();
        std::uint8_t* dst = out.data();
        for (std::size_t off = 0; off < in.size(); off += bs) c.encrypt_block(src + off, dst + off);
    });
}

void CipherState::decrypt_blocks(ByteView in, MutableByteView out) const {
    visit_block_cipher(schedule_, [&](const auto& c) {
        constexpr std::size_t bs = std::decay_t<decltype(c)>::kBlockBytes;
        check_whole_blocks(in, out, bs);
        const std::uint8_t* src = in.data();
        std::uint8_t* dst = out.data();
        for (std::size_t off = 0; off < in.size(); off += bs) c.decrypt_block(src + off, dst + off);
    });
}

CipherState make_cipher_state(const KeyMaterial& key) {
    const CipherInfo& info = cipher_info(key.cipher);
    if (!info.key_sizes_bits.contains(key.key_bits)) {
        throw Error(ErrorCode::UnsupportedKeySize, std::string(info.name) + " does not support " +
                                                       std::to_string(key.key_bits) + "-bit keys");
    }
    if (key.key_bytes.size() != key_bytes_for(key.cipher, key.key_bits)) {
        throw Error(ErrorCode::MalformedKey, std::string(info.name) + " key of " + std::to_string(key.key_bits) +
                                                 " bits cannot be " + std::to_string(key.key_bytes.size()) +
                                                 " bytes long");
    }
    const ByteView k = key.key_bytes;
    auto schedule = [&]() -> CipherState::Schedule {
        switch (key.cipher) {
            case CipherId::AES: return ciphers::Aes(k);
            case CipherId::BLOWFISH: return ciphers::Blowfish(k);
            case CipherId::DES: return ciphers::Des(k);
            case CipherId::RC2: return ciphers::Rc2(k, key.key_bits);
            case CipherId::RC4: return ciphers::Rc4(k);
            case CipherId::SKIPJACK: return ciphers::Skipjack(k);
            case CipherId::TDES: return ciphers::TripleDes(k);
        }
        throw Error(ErrorCode::BadArgument, "unknown cipher id");
    };
    return CipherState(key.cipher, key.key_bits, schedule());
}

namespace {

void check_single_block(const CipherState& state, ByteView block) {
    if (state.is_stream()) throw Error(ErrorCode::StreamCipherMisuse, "RC4 is a stream cipher; use rc4_apply");
    if (block.size() != state.block_bytes()) {
        throw Error(ErrorCode::WrongBlockLength, "expected a " + std::to_string(state.block_bytes()) +
                                                     "-byte block, got " + std::to_string(block.size()));
    }
}

}  // namespace

Bytes encrypt_block(const CipherState& state, ByteView block) {
    check_single_block(state, block);
    Bytes out(block.size());
    state.encrypt_blocks(block, out);
    return out;
}

Bytes decrypt_block(const CipherState& state, ByteView block) {
    check_single_block(state, block);
    Bytes out(block.size());
    state.decrypt_blocks(block, out);
    return out;
}

Bytes rc4_apply(CipherState& state, ByteView data) {
    auto* rc4 = std::get_if<ciphers::Rc4>(&state.schedule());
    if (rc4 == nullptr) throw Error(ErrorCode::BlockCipherMisuse, "rc4_apply requires an RC4 state");
    Bytes out(data.size());
    rc4->apply(data, out);
    return out;
}

}  // namespace cipherselect
