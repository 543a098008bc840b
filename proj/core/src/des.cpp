#include "cipherselect/ciphers/des.hpp"

#include <bit>

#include "cipherselect/error.hpp"

namespace cipherselect::ciphers {

namespace {

// FIPS 46-3 tables. Bit positions are 1-based, MSB first.
constexpr std::uint8_t kIp[64] = {
    58, 50, 42, 34, 26, 18, 10, 2, 60, 52, 44, 36, 28, 20, 12, 4,
    62, 54, 46, 38, 30, 22, 14, 6, 64, 56, 48, 40, 32, 24, 16, 8,
    57, 49, 41, 33, 25, 17, 9,  1, 59, 51, 43, 35, 27, 19, 11, 3,
    61, 53, 45, 37, 29, 21, 13, 5, 63, 55, 47, 39, 31, 23, 15, 7,
};

constexpr std::uint8_t kFp[64] = {
    40, 8, 48, 16, 56, 24, 64, 32, 39, 7, 47, 15, 55, 23, 63, 31,
    38, 6, 46, 14, 54, 22, 62, 30, 37, 5, 45, 13, 53, 21, 61, 29,
    36, 4, 44, 12, 52, 20, 60, 28, 35, 3, 43, 11, 51, 19, 59, 27,
    34, 2, 42, 10, 50, 18, 58, 26, 33, 1, 41, 9,  49, 17, 57, 25,
};

constexpr std::uint8_t kP[32] = {
    16, 7, 20, 21, 29, 12, 28, 17, 1,  15, 23, 26, 5,  18, 31, 10,
    2,  8, 24, 14, 32, 27, 3,  9,  19, 13, 30, 6,  22, 11, 4,  25,
};

constexpr std::uint8_t kPc1[56] = {
    57, 49, 41, 33, 25, 17, 9,  1,  58, 50, 42, 34, 26, 18,
    10, 2,  59, 51, 43, 35, 27, 19, 11, 3,  60, 52, 44, 36,
    63, 55, 47, 39, 31, 23, 15, 7,  62, 54, 46, 38, 30, 22,
    14, 6,  61, 53, 45, 37, 29, 21, 13, 5,  28, 20, 12, 4,
};

constexpr std::uint8_t kPc2[48] = {
    14, 17, 11, 24, 1,  5,  3,  28, 15, 6,  21, 10,
    23, 19, 12, 4,  26, 8,  16, 7,  27, 20, 13, 2,
    41, 52, 31, 37, 47, 55, 30, 40, 51, 45, 33, 48,
    44, 49, 39, 56, 34, 53, 46, 42, 50, 36, 29, 32,
};

constexpr std::uint8_t kShifts[16] = {1, 1, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 1};

constexpr std::uint8_t kSboxes[8][4][16] = {
    {{14, 4, 13, 1, 2, 15, 11, 8, 3, 10, 6, 12, 5, 9, 0, 7},
     {0, 15, 7, 4, 14, 2, 13, 1, 10, 6, 12, 11, 9, 5, 3, 8},
     {4, 1, 14, 8, 13, 6, 2, 11, 15, 12, 9, 7, 3, 10, 5, 0},
     {15, 12, 8, 2, 4, 9, 1, 7, 5, 11, 3, 14, 10, 0, 6, 13}},
    {{15, 1, 8, 14, 6, 11, 3, 4, 9, 7, 2, 13, 12, 0, 5, 10},
     {3, 13, 4, 7, 15, 2, 8, 14, 12, 0, 1, 10, 6, 9, 11, 5},
     {0, 14, 7, 11, 10, 4, 13, 1, 5, 8, 12, 6, 9, 3, 2, 15},
     {13, 8, 10, 1, 3, 15, 4, 2, 11, 6, 7, 12, 0, 5, 14, 9}},
    {{10, 0, 9, 14, 6, 3, 15, 5, 1, 13, 12, 7, 11, 4, 2, 8},
     {13, 7, 0, 9, 3, 4, 6, 10, 2, 8, 5, 14, 12, 11, 15, 1},
     {13, 6, 4, 9, 8, 15, 3, 0, 11, 1, 2, 12, 5, 10, 14, 7},
     {1, 10, 13, 0, 6, 9, 8, 7, 4, 15, 14, 3, 11, 5, 2, 12}},
    {{7, 13, 14, 3, 0, 6, 9, 10, 1, 2, 8, 5, 11, 12, 4, 15},
     {13, 8, 11, 5, 6, 15, 0, 3, 4, 7, 2, 12, 1, 10, 14, 9},
     {10, 6, 9, 0, 12, 11, 7, 13, 15, 1, 3, 14, 5, 2, 8, 4},
     {3, 15, 0, 6, 10, 1, 13, 8, 9, 4, 5, 11, 12, 7, 2, 14}},
    {{2, 12, 4, 1, 7, 10, 11, 6, 8, 5, 3, 15, 13, 0, 14, 9},
     {14, 11, 2, 12, 4, 7, 13, 1, 5, 0, 15, 10, 3, 9, 8, 6},
     {4, 2, 1, 11, 10, 13, 7, 8, 15, 9, 12, 5, 6, 3, 0, 14},
     {11, 8, 12, 7, 1, 14, 2, 13, 6, 15, 0, 9, 10, 4, 5, 3}},
    {{12, 1, 10, 15, 9, 2, 6, 8, 0, 13, 3, 4, 14, 7, 5, 11},
     {10, 15, 4, 2, 7, 12, 9, 5, 6, 1, 13, 14, 0, 11, 3, 8},
     {9, 14, 15, 5, 2, 8, 12, 3, 7, 0, 4, 10, 1, 13, 11, 6},
     {4, 3, 2, 12, 9, 5, 15, 10, 11, 14, 1, 7, 6, 0, 8, 13}},
    {{4, 11, 2, 14, 15, 0, 8, 13, 3, 12, 9, 7, 5, 10, 6, 1},
     {13, 0, 11, 7, 4, 9, 1, 10, 14, 3, 5, 12, 2, 15, 8, 6},
     {1, 4, 11, 13, 12, 3, 7, 14, 10, 15, 6, 8, 0, 5, 9, 2},
     {6, 11, 13, 8, 1, 4, 10, 7, 9, 5, 0, 15, 14, 2, 3, 12}},
    {{13, 2, 8, 4, 6, 15, 11, 1, 10, 9, 3, 14, 5, 0, 12, 7},
     {1, 15, 13, 8, 10, 3, 7, 4, 12, 5, 6, 11, 0, 14, 9, 2},
     {7, 11, 4, 1, 9, 12, 14, 2, 0, 6, 10, 13, 15, 3, 5, 8},
     {2, 1, 14, 7, 4, 10, 8, 13, 15, 12, 9, 0, 3, 5, 6, 11}},
};

// Bit-by-bit permutation: output bit k (1-based, MSB first, of out_bits) is
// input bit table[k-1] (of in_bits).
template <std::size_t N>
constexpr std::uint64_t permute(std::uint64_t in, int in_bits, const std::uint8_t (&table)[N]) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < N; ++k) {
        out = (out << 1) | ((in >> (in_bits - table[k])) & 1);
    }
    return out;
}

using ByteTable = std::array<std::array<std::uint64_t, 256>, 8>;

// A 64-bit permutation is linear over GF(2), so it splits into eight
// per-input-byte lookups OR-ed together.
constexpr ByteTable make_byte_table(const std::uint8_t (&table)[64]) {
    ByteTable t{};
    for (int pos = 0; pos < 8; ++pos) {
        for (int v = 0; v < 256; ++v) {
            const std::uint64_t in = std::uint64_t(v) << (56 - 8 * pos);
            t[pos][v] = permute(in, 64, table);
        }
    }
    return t;
}

// sp[i][x]: S-box i applied to 6-bit input x, placed in its nibble, then
// passed through P.
constexpr std::array<std::array<std::uint32_t, 64>, 8> make_sp() {
    std::array<std::array<std::uint32_t, 64>, 8> sp{};
    for (int i = 0; i < 8; ++i) {
        for (int x = 0; x < 64; ++x) {
            const int row = ((x >> 4) & 2) | (x & 1);
            const int col = (x >> 1) & 0xf;
            const std::uint64_t nibble = std::uint64_t(kSboxes[i][row][col]) << (28 - 4 * i);
            sp[i][x] = static_cast<std::uint32_t>(permute(nibble, 32, kP));
        }
    }
    return sp;
}

constexpr ByteTable kIpTable = make_byte_table(kIp);
constexpr ByteTable kFpTable = make_byte_table(kFp);
constexpr auto kSp = make_sp();

inline std::uint64_t apply(const ByteTable& t, std::uint64_t x) noexcept {
    std::uint64_t out = 0;
    for (int pos = 0; pos < 8; ++pos) out |= t[pos][(x >> (56 - 8 * pos)) & 0xff];
    return out;
}

inline std::uint64_t load_be64(const std::uint8_t* p) noexcept {
    return (std::uint64_t{detail::load_be32(p)} << 32) | detail::load_be32(p + 4);
}

inline void store_be64(std::uint8_t* p, std::uint64_t v) noexcept {
    detail::store_be32(p, static_cast<std::uint32_t>(v >> 32));
    detail::store_be32(p + 4, static_cast<std::uint32_t>(v));
}

inline std::uint32_t feistel(std::uint32_t r, const std::array<std::uint8_t, 8>& k) noexcept {
    // The E expansion feeds S-box i with bits 4i .. 4i+5 of R (1-based,
    // wrapping), which is the low six bits of R rotated left by 4i+5.
    std::uint32_t out = 0;
    for (int i = 0; i < 8; ++i) {
        out |= kSp[i][(std::rotl(r, 4 * i + 5) & 0x3f) ^ k[i]];
    }
    return out;
}

}  // namespace

Des::Des(ByteView key) {
    if (key.size() != 8) throw Error(ErrorCode::MalformedKey, "DES key must be 8 bytes");
    const std::uint64_t cd = permute(load_be64(key.data()), 64, kPc1);
    std::uint32_t c = static_cast<std::uint32_t>(cd >> 28) & 0x0fffffff;
    std::uint32_t d = static_cast<std::uint32_t>(cd) & 0x0fffffff;
    auto rot28 = [](std::uint32_t v, int n) { return ((v << n) | (v >> (28 - n))) & 0x0fffffff; };
    for (int r = 0; r < 16; ++r) {
        c = rot28(c, kShifts[r]);
        d = rot28(d, kShifts[r]);
        const std::uint64_t k = permute((std::uint64_t{c} << 28) | d, 56, kPc2);
        for (int i = 0; i < 8; ++i) subkeys_[r][i] = static_cast<std::uint8_t>((k >> (42 - 6 * i)) & 0x3f);
    }
}

std::uint64_t Des::round_key(int round) const {
    if (round < 0 || round > 15) throw Error(ErrorCode::BadArgument, "DES round index out of range");
    std::uint64_t k = 0;
    for (int i = 0; i < 8; ++i) k = (k << 6) | subkeys_[round][i];
    return k;
}

std::uint64_t Des::crypt(std::uint64_t block, bool decrypt) const noexcept {
    const std::uint64_t ip = apply(kIpTable, block);
    std::uint32_t l = static_cast<std::uint32_t>(ip >> 32);
    std::uint32_t r = static_cast<std::uint32_t>(ip);
    for (int round = 0; round < 16; ++round) {
        const auto& k = subkeys_[decrypt ? 15 - round : round];
        const std::uint32_t next = l ^ feistel(r, k);
        l = r;
        r = next;
    }
    return apply(kFpTable, (std::uint64_t{r} << 32) | l);
}

void Des::encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    store_be64(out, crypt(load_be64(in), false));
}

void Des::decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    store_be64(out, crypt(load_be64(in), true));
}

namespace {

ByteView checked_tdes_key(ByteView key) {
    if (key.size() != 16 && key.size() != 24) throw Error(ErrorCode::MalformedKey, "TDES key must be 16 or 24 bytes");
    return key;
}

}  // namespace

TripleDes::TripleDes(ByteView key)
    : k1_(checked_tdes_key(key).first(8)),
      k2_(key.subspan(8, 8)),
      k3_(key.size() == 24 ? key.subspan(16, 8) : key.first(8)) {}

void TripleDes::encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint8_t tmp[8];
    k1_.encrypt_block(in, tmp);
    k2_.decrypt_block(tmp, tmp);
    k3_.encrypt_block(tmp, out);
}

void TripleDes::decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint8_t tmp[8];
    k3_.decrypt_block(in, tmp);
    k2_.encrypt_block(tmp, tmp);
    k1_.decrypt_block(tmp, out);
}

}  // namespace cipherselect::ciphers
