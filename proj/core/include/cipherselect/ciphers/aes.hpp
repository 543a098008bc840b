#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "cipherselect/bytes.hpp"

namespace cipherselect::ciphers {

/// AES (Rijndael with 128-bit blocks) for 16, 24 or 32 byte keys.
///
/// Table-driven: four 1 KiB lookup tables per direction, generated at
/// compile time from the GF(2^8) definition of the S-box. Not constant time.
class Aes {
public:
    static constexpr std::size_t kBlockBytes = 16;

    /// Throws Error(MalformedKey) unless key.size() is 16, 24 or 32.
    explicit Aes(ByteView key);

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;
    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;

    int rounds() const noexcept { return rounds_; }

    /// Encryption round key `index` (0..rounds) as 16 bytes.
    std::array<std::uint8_t, 16> round_key(int index) const;

private:
    int rounds_;
    std::array<std::uint32_t, 60> enc_{};
    std::array<std::uint32_t, 60> dec_{};
};

}  // namespace cipherselect::ciphers
