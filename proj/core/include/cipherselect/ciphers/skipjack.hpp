#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "cipherselect/bytes.hpp"

namespace cipherselect::ciphers {

/// Skipjack with its fixed 80-bit key.
class Skipjack {
public:
    static constexpr std::size_t kBlockBytes = 8;

    explicit Skipjack(ByteView key);

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;
    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept;

private:
    // ftab_[k][x] = F[x ^ key[k]]: the key byte folded into the F table.
    std::array<std::array<std::uint8_t, 256>, 10> ftab_{};

    std::uint16_t g(int step, std::uint16_t w) const noexcept;
    std::uint16_t g_inverse(int step, std::uint16_t w) const noexcept;
};

}  // namespace cipherselect::ciphers
