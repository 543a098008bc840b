#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cipherselect/bytes.hpp"
#include "cipherselect/ciphers/aes.hpp"
#include "cipherselect/ciphers/blowfish.hpp"
#include "cipherselect/ciphers/des.hpp"
#include "cipherselect/ciphers/rc2.hpp"
#include "cipherselect/ciphers/rc4.hpp"
#include "cipherselect/ciphers/skipjack.hpp"

namespace cipherselect {

// Enumerator order is the lexicographic order of the canonical names, so
// comparing CipherId values compares names.
enum class CipherId : std::uint8_t { AES, BLOWFISH, DES, RC2, RC4, SKIPJACK, TDES };

inline constexpr std::array<CipherId, 7> kAllCiphers = {
    CipherId::AES, CipherId::BLOWFISH, CipherId::DES, CipherId::RC2,
    CipherId::RC4, CipherId::SKIPJACK, CipherId::TDES,
};

enum class CipherType : std::uint8_t { Block, Stream };

std::string_view to_string(CipherId id) noexcept;
std::string_view to_string(CipherType type) noexcept;

/// Case-insensitive; also accepts "3DES"/"TRIPLEDES" for TDES.
std::optional<CipherId> parse_cipher_id(std::string_view name);

/// Key sizes in bits: either an explicit list or an inclusive stepped range.
struct KeySizes {
    std::vector<int> listed;
    int range_min = 0;
    int range_max = 0;
    int range_step = 0;

    bool contains(int bits) const noexcept;
    int minimum() const noexcept;
    int maximum() const noexcept;
    std::vector<int> values() const;
};

struct CipherInfo {
    CipherId id;
    std::string_view name;
    std::string_view structure;
    CipherType type;
    int block_size_bits;  // 0 for the stream cipher
    std::vector<int> rounds;
    KeySizes key_sizes_bits;

    int block_bytes() const noexcept { return block_size_bits / 8; }
};

const CipherInfo& cipher_info(CipherId id);

/// Bytes of raw key needed for `key_bits` effective bits. DES and TDES carry
/// one parity bit per byte, so 56/112/168 bits map to 8/16/24 bytes.
/// Throws Error(UnsupportedKeySize) for sizes outside the registry.
std::size_t key_bytes_for(CipherId id, int key_bits);

struct KeyMaterial {
    CipherId cipher;
    Bytes key_bytes;
    int key_bits;

    /// Infers key_bits from the byte length (parity-aware for DES/TDES).
    static KeyMaterial from_bytes(CipherId cipher, Bytes key);

    /// Deterministic pseudo-random key of the requested size.
    static KeyMaterial generate(CipherId cipher, int key_bits, std::uint64_t seed);

    friend bool operator==(const KeyMaterial&, const KeyMaterial&) = default;
};

/// Post-key-schedule state for one (cipher, key) pair. Block-cipher states
/// are immutable once built and may be shared between threads; the RC4
/// state mutates as its keystream advances and has a single owner.
class CipherState {
public:
    using Schedule = std::variant<ciphers::Aes, ciphers::Des, ciphers::TripleDes, ciphers::Rc2,
                                  ciphers::Blowfish, ciphers::Skipjack, ciphers::Rc4>;

    CipherState(CipherId id, int key_bits, Schedule schedule);

    CipherId id() const noexcept { return id_; }
    int key_bits() const noexcept { return key_bits_; }
    const CipherInfo& info() const { return cipher_info(id_); }
    bool is_stream() const noexcept { return std::holds_alternative<ciphers::Rc4>(schedule_); }
    std::size_t block_bytes() const noexcept;

    const Schedule& schedule() const noexcept { return schedule_; }
    Schedule& schedule() noexcept { return schedule_; }

    /// ECB over whole blocks: in.size() must be a multiple of block_bytes()
    /// and out.size() >= in.size(). Dispatches once per call, not per block.
    void encrypt_blocks(ByteView in, MutableByteView out) const;
    void decrypt_blocks(ByteView in, MutableByteView out) const;

private:
    CipherId id_;
    int key_bits_;
    Schedule schedule_;
};

CipherState make_cipher_state(const KeyMaterial& key);

Bytes encrypt_block(const CipherState& state, ByteView block);
Bytes decrypt_block(const CipherState& state, ByteView block);

/// data XOR keystream; advances the state by data.size() bytes.
Bytes rc4_apply(CipherState& state, ByteView data);

}  // namespace cipherselect
