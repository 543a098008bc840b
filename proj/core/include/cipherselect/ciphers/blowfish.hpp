#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "cipherselect/bytes.hpp"

namespace cipherselect::ciphers {

/// Blowfish, 1..56 byte keys.
class Blowfish {
public:
    static constexpr std::size_t kBlockBytes = 8;

    explicit Blowfish(ByteView key);

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;
    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;

private:
    std::array<std::uint32_t, 18> p_{};
    std::array<std::array<std::uint32_t, 256>, 4> s_{};

    std::uint32_t f(std::uint32_t x) const noexcept;
    void encrypt_words(std::uint32_t& l, std::uint32_t& r) const noexcept;
};

}  // namespace cipherselect::ciphers
