#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "cipherselect/bytes.hpp"

namespace cipherselect::ciphers {

/// Single DES. Takes the 8-byte key including parity bits; parity is ignored.
class Des {
public:
    static constexpr std::size_t kBlockBytes = 8;

    explicit Des(ByteView key);

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;
    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;

    /// The 48-bit subkey of round `round` (0..15), right-aligned.
    std::uint64_t round_key(int round) const;

private:
    // Each round key is stored as eight 6-bit groups, S-box order.
    std::array<std::array<std::uint8_t, 8>, 16> subkeys_{};

    std::uint64_t crypt(std::uint64_t block, bool decrypt) const noexcept;
};

/// Triple DES in EDE form. A 16-byte key is two-key TDES (K1, K2, K1); a
/// 24-byte key is three-key TDES.
class TripleDes {
public:
    static constexpr std::size_t kBlockBytes = 8;

    explicit TripleDes(ByteView key);

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;
    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;

private:
    Des k1_;
    Des k2_;
    Des k3_;
};

}  // namespace cipherselect::ciphers
