#include "cipherselect/ciphers/aes.hpp"

#include <bit>

#include "cipherselect/error.hpp"

namespace cipherselect::ciphers {

namespace {

using detail::load_be32;
using detail::store_be32;

constexpr std::uint8_t xtime(std::uint8_t x) {
    return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a = xtime(a);
        b >>= 1;
    }
    return r;
}

constexpr std::uint8_t rotl8(std::uint8_t x, int n) {
    return static_cast<std::uint8_t>((x << n) | (x >> (8 - n)));
}

struct Tables {
    std::array<std::uint8_t, 256> sbox{};
    std::array<std::uint8_t, 256> inv_sbox{};
    std::array<std::uint32_t, 256> te{};  // column (2s, s, s, 3s)
    std::array<std::uint32_t, 256> td{};  // column (14t, 9t, 13t, 11t), t = inv_sbox
};

constexpr Tables make_tables() {
    Tables t;
    for (int x = 0; x < 256; ++x) {
        // Multiplicative inverse as x^254; 0 maps to 0.
        std::uint8_t inv = 0;
        if (x != 0) {
            std::uint8_t acc = 1;
            std::uint8_t base = static_cast<std::uint8_t>(x);
            for (int e = 254; e; e >>= 1) {
                if (e & 1) acc = gf_mul(acc, base);
                base = gf_mul(base, base);
            }
            inv = acc;
        }
        std::uint8_t s = inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^ rotl8(inv, 4) ^ 0x63;
        t.sbox[x] = s;
        t.inv_sbox[s] = static_cast<std::uint8_t>(x);
    }
    for (int x = 0; x < 256; ++x) {
        std::uint8_t s = t.sbox[x];
        t.te[x] = (std::uint32_t{gf_mul(s, 2)} << 24) | (std::uint32_t{s} << 16) | (std::uint32_t{s} << 8) |
                  gf_mul(s, 3);
        std::uint8_t i = t.inv_sbox[x];
        t.td[x] = (std::uint32_t{gf_mul(i, 14)} << 24) | (std::uint32_t{gf_mul(i, 9)} << 16) |
                  (std::uint32_t{gf_mul(i, 13)} << 8) | gf_mul(i, 11);
    }
    return t;
}

constexpr Tables kTables = make_tables();

template <int R>
constexpr std::array<std::uint32_t, 256> rotated(const std::array<std::uint32_t, 256>& base) {
    std::array<std::uint32_t, 256> out{};
    for (int i = 0; i < 256; ++i) out[i] = std::rotr(base[i], R);
    return out;
}

constexpr auto kTe0 = kTables.te;
constexpr auto kTe1 = rotated<8>(kTables.te);
constexpr auto kTe2 = rotated<16>(kTables.te);
constexpr auto kTe3 = rotated<24>(kTables.te);
constexpr auto kTd0 = kTables.td;
constexpr auto kTd1 = rotated<8>(kTables.td);
constexpr auto kTd2 = rotated<16>(kTables.td);
constexpr auto kTd3 = rotated<24>(kTables.td);
constexpr auto& kSbox = kTables.sbox;
constexpr auto& kInvSbox = kTables.inv_sbox;

inline std::uint32_t sub_word(std::uint32_t w) {
    return (std::uint32_t{kSbox[w >> 24]} << 24) | (std::uint32_t{kSbox[(w >> 16) & 0xff]} << 16) |
           (std::uint32_t{kSbox[(w >> 8) & 0xff]} << 8) | kSbox[w & 0xff];
}

inline std::uint32_t inv_mix_column(std::uint32_t w) {
    return kTd0[kSbox[w >> 24]] ^ kTd1[kSbox[(w >> 16) & 0xff]] ^ kTd2[kSbox[(w >> 8) & 0xff]] ^
           kTd3[kSbox[w & 0xff]];
}

inline std::uint8_t byte_at(std::uint32_t w, int shift) { return static_cast<std::uint8_t>(w >> shift); }

}  // namespace

Aes::Aes(ByteView key) {
    const std::size_t nk = key.size() / 4;
    if (key.size() != 16 && key.size() != 24 && key.size() != 32) {
        throw Error(ErrorCode::MalformedKey, "AES key must be 16, 24 or 32 bytes");
    }
    rounds_ = static_cast<int>(nk) + 6;
    const std::size_t total = 4 * (static_cast<std::size_t>(rounds_) + 1);

    for (std::size_t i = 0; i < nk; ++i) enc_[i] = load_be32(key.data() + 4 * i);
    std::uint32_t rcon = 0x01;
    for (std::size_t i = nk; i < total; ++i) {
        std::uint32_t temp = enc_[i - 1];
        if (i % nk == 0) {
            temp = sub_word(std::rotl(temp, 8)) ^ (rcon << 24);
            rcon = xtime(static_cast<std::uint8_t>(rcon));
        } else if (nk > 6 && i % nk == 4) {
            temp = sub_word(temp);
        }
        enc_[i] = enc_[i - nk] ^ temp;
    }

    // Equivalent inverse cipher: round keys in reverse order, with
    // InvMixColumns applied to all but the first and last.
    for (int r = 0; r <= rounds_; ++r) {
        for (int c = 0; c < 4; ++c) {
            std::uint32_t w = enc_[4 * (rounds_ - r) + c];
            dec_[4 * r + c] = (r == 0 || r == rounds_) ? w : inv_mix_column(w);
        }
    }
}

std::array<std::uint8_t, 16> Aes::round_key(int index) const {
    if (index < 0 || index > rounds_) throw Error(ErrorCode::BadArgument, "AES round key index out of range");
    std::array<std::uint8_t, 16> out{};
    for (int c = 0; c < 4; ++c) store_be32(out.data() + 4 * c, enc_[4 * index + c]);
    return out;
}

void Aes::encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    const std::uint32_t* rk = enc_.data();
    std::uint32_t s0 = load_be32(in) ^ rk[0];
    std::uint32_t s1 = load_be32(in + 4) ^ rk[1];
    std::uint32_t s2 = load_be32(in + 8) ^ rk[2];
    std::uint32_t s3 = load_be32(in + 12) ^ rk[3];

    for (int r = 1; r < rounds_; ++r) {
        rk += 4;
        const std::uint32_t t0 = kTe0[s0 >> 24] ^ kTe1[byte_at(s1, 16)] ^ kTe2[byte_at(s2, 8)] ^ kTe3[s3 & 0xff] ^ rk[0];
        const std::uint32_t t1 = kTe0[s1 >> 24] ^ kTe1[byte_at(s2, 16)] ^ kTe2[byte_at(s3, 8)] ^ kTe3[s0 & 0xff] ^ rk[1];
        const std::uint32_t t2 = kTe0[s2 >> 24] ^ kTe1[byte_at(s3, 16)] ^ kTe2[byte_at(s0, 8)] ^ kTe3[s1 & 0xff] ^ rk[2];
        const std::uint32_t t3 = kTe0[s3 >> 24] ^ kTe1[byte_at(s0, 16)] ^ kTe2[byte_at(s1, 8)] ^ kTe3[s2 & 0xff] ^ rk[3];
        s0 = t0;
        s1 = t1;
        s2 = t2;
        s3 = t3;
    }

    rk += 4;
    auto last = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d, std::uint32_t k) {
        return ((std::uint32_t{kSbox[a >> 24]} << 24) | (std::uint32_t{kSbox[byte_at(b, 16)]} << 16) |
                (std::uint32_t{kSbox[byte_at(c, 8)]} << 8) | kSbox[d & 0xff]) ^
               k;
    };
    store_be32(out, last(s0, s1, s2, s3, rk[0]));
    store_be32(out + 4, last(s1, s2, s3, s0, rk[1]));
    store_be32(out + 8, last(s2, s3, s0, s1, rk[2]));
    store_be32(out + 12, last(s3, s0, s1, s2, rk[3]));
}

void Aes::decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    const std::uint32_t* rk = dec_.data();
    std::uint32_t s0 = load_be32(in) ^ rk[0];
    std::uint32_t s1 = load_be32(in + 4) ^ rk[1];
    std::uint32_t s2 = load_be32(in + 8) ^ rk[2];
    std::uint32_t s3 = load_be32(in + 12) ^ rk[3];

    for (int r = 1; r < rounds_; ++r) {
        rk += 4;
        const std::uint32_t t0 = kTd0[s0 >> 24] ^ kTd1[byte_at(s3, 16)] ^ kTd2[byte_at(s2, 8)] ^ kTd3[s1 & 0xff] ^ rk[0];
        const std::uint32_t t1 = kTd0[s1 >> 24] ^ kTd1[byte_at(s0, 16)] ^ kTd2[byte_at(s3, 8)] ^ kTd3[s2 & 0xff] ^ rk[1];
        const std::uint32_t t2 = kTd0[s2 >> 24] ^ kTd1[byte_at(s1, 16)] ^ kTd2[byte_at(s0, 8)] ^ kTd3[s3 & 0xff] ^ rk[2];
        const std::uint32_t t3 = kTd0[s3 >> 24] ^ kTd1[byte_at(s2, 16)] ^ kTd2[byte_at(s1, 8)] ^ kTd3[s0 & 0xff] ^ rk[3];
        s0 = t0;
        s1 = t1;
        s2 = t2;
        s3 = t3;
    }

    rk += 4;
    auto last = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d, std::uint32_t k) {
        return ((std::uint32_t{kInvSbox[a >> 24]} << 24) | (std::uint32_t{kInvSbox[byte_at(b, 16)]} << 16) |
                (std::uint32_t{kInvSbox[byte_at(c, 8)]} << 8) | kInvSbox[d & 0xff]) ^
               k;
    };
    store_be32(out, last(s0, s3, s2, s1, rk[0]));
    store_be32(out + 4, last(s1, s0, s3, s2, rk[1]));
    store_be32(out + 8, last(s2, s1, s0, s3, rk[2]));
    store_be32(out + 12, last(s3, s2, s1, s0, rk[3]));
}

}  // namespace cipherselect::ciphers
