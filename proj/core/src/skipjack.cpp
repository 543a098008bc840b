#include "cipherselect/ciphers/skipjack.hpp"

#include "cipherselect/error.hpp"

namespace cipherselect::ciphers {

namespace {

#include "skipjack_ftable.inc"

inline std::uint16_t load_be16(const std::uint8_t* p) noexcept {
    return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

inline void store_be16(std::uint8_t* p, std::uint16_t v) noexcept {
    p[0] = static_cast<std::uint8_t>(v >> 8);
    p[1] = static_cast<std::uint8_t>(v);
}

// Steps 0-7 and 16-23 use rule A, the rest rule B.
constexpr bool is_rule_a(int step) noexcept { return (step / 8) % 2 == 0; }

}  // namespace

Skipjack::Skipjack(ByteView key) {
    if (key.size() != 10) throw Error(ErrorCode::MalformedKey, "Skipjack key must be 10 bytes");
    for (int k = 0; k < 10; ++k) {
        for (int x = 0; x < 256; ++x) ftab_[k][x] = kFTable[x ^ key[k]];
    }
}

// Four-round Feistel permutation G on 16 bits; step selects the key bytes
// 4*step .. 4*step+3 (mod 10).
std::uint16_t Skipjack::g(int step, std::uint16_t w) const noexcept {
    const int base = 4 * step;
    std::uint8_t g1 = static_cast<std::uint8_t>(w >> 8);
    std::uint8_t g2 = static_cast<std::uint8_t>(w);
    g1 ^= ftab_[base % 10][g2];
    g2 ^= ftab_[(base + 1) % 10][g1];
    g1 ^= ftab_[(base + 2) % 10][g2];
    g2 ^= ftab_[(base + 3) % 10][g1];
    return static_cast<std::uint16_t>((g1 << 8) | g2);
}

std::uint16_t Skipjack::g_inverse(int step, std::uint16_t w) const noexcept {
    const int base = 4 * step;
    std::uint8_t g1 = static_cast<std::uint8_t>(w >> 8);
    std::uint8_t g2 = static_cast<std::uint8_t>(w);
    g2 ^= ftab_[(base + 3) % 10][g1];
    g1 ^= ftab_[(base + 2) % 10][g2];
    g2 ^= ftab_[(base + 1) % 10][g1];
    g1 ^= ftab_[base % 10][g2];
    return static_cast<std::uint16_t>((g1 << 8) | g2);
}

void Skipjack::encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint16_t w1 = load_be16(in);
    std::uint16_t w2 = load_be16(in + 2);
    std::uint16_t w3 = load_be16(in + 4);
    std::uint16_t w4 = load_be16(in + 6);

    for (int step = 0; step < 32; ++step) {
        const auto counter = static_cast<std::uint16_t>(step + 1);
        const std::uint16_t gw = g(step, w1);
        if (is_rule_a(step)) {
            const auto n1 = static_cast<std::uint16_t>(gw ^ w4 ^ counter);
            w4 = w3;
            w3 = w2;
            w2 = gw;
            w1 = n1;
        } else {
            const auto n3 = static_cast<std::uint16_t>(w1 ^ w2 ^ counter);
            w1 = w4;
            w4 = w3;
            w3 = n3;
            w2 = gw;
        }
    }

    store_be16(out, w1);
    store_be16(out + 2, w2);
    store_be16(out + 4, w3);
    store_be16(out + 6, w4);
}

void Skipjack::decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint16_t w1 = load_be16(in);
    std::uint16_t w2 = load_be16(in + 2);
    std::uint16_t w3 = load_be16(in + 4);
    std::uint16_t w4 = load_be16(in + 6);

    for (int step = 31; step >= 0; --step) {
        const auto counter = static_cast<std::uint16_t>(step + 1);
        const std::uint16_t prev1 = g_inverse(step, w2);
        if (is_rule_a(step)) {
            const auto prev4 = static_cast<std::uint16_t>(w1 ^ w2 ^ counter);
            w1 = prev1;
            w2 = w3;
            w3 = w4;
            w4 = prev4;
        } else {
            const auto prev2 = static_cast<std::uint16_t>(w3 ^ prev1 ^ counter);
            w3 = w4;
            w4 = w1;
            w1 = prev1;
            w2 = prev2;
        }
    }

    store_be16(out, w1);
    store_be16(out + 2, w2);
    store_be16(out + 4, w3);
    store_be16(out + 6, w4);
}

}  // namespace cipherselect::ciphers
