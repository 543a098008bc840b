#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "cipherselect/bytes.hpp"

namespace cipherselect::ciphers {

/// RC2 as defined in RFC 2268.
class Rc2 {
public:
    static constexpr std::size_t kBlockBytes = 8;

    /// Key of 1..128 bytes; effective key bits 1..1024.
    Rc2(ByteView key, int effective_bits);

    /// Effective key bits equal to the supplied key length in bits.
    explicit Rc2(ByteView key);

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;
    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;

private:
    std::array<std::uint16_t, 64> k_{};
};

}  // namespace cipherselect::ciphers
