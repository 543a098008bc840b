#pragma once

#include <array>
#include <cstdint>

#include "cipherselect/bytes.hpp"

namespace cipherselect::ciphers {

/// RC4 keystream generator. Mutable: every byte processed advances the state.
class Rc4 {
public:
    /// Key of 1..256 bytes.
    explicit Rc4(ByteView key);

    /// out[k] = in[k] ^ keystream byte. `in` and `out` may alias exactly.
    void apply(ByteView in, MutableByteView out) noexcept;

    const std::array<std::uint8_t, 256>& permutation() const noexcept { return s_; }
    std::uint8_t i() const noexcept { return i_; }
    std::uint8_t j() const noexcept { return j_; }

private:
    std::array<std::uint8_t, 256> s_{};
    std::uint8_t i_ = 0;
    std::uint8_t j_ = 0;
};

}  // namespace cipherselect::ciphers
