#include "cipherselect/ciphers/rc2.hpp"

#include <bit>

#include "cipherselect/error.hpp"

namespace cipherselect::ciphers {

namespace {

#include "rc2_pitable.inc"

inline std::uint16_t rotl16(std::uint16_t x, int n) noexcept {
    return static_cast<std::uint16_t>((x << n) | (x >> (16 - n)));
}

inline std::uint16_t rotr16(std::uint16_t x, int n) noexcept {
    return static_cast<std::uint16_t>((x >> n) | (x << (16 - n)));
}

}  // namespace

Rc2::Rc2(ByteView key) : Rc2(key, static_cast<int>(key.size() * 8)) {}

Rc2::Rc2(ByteView key, int effective_bits) {
    if (key.empty() || key.size() > 128) throw Error(ErrorCode::MalformedKey, "RC2 key must be 1..128 bytes");
    if (effective_bits < 1 || effective_bits > 1024) {
        throw Error(ErrorCode::UnsupportedKeySize, "RC2 effective key bits must be 1..1024");
    }

    std::array<std::uint8_t, 128> l{};
    const std::size_t t = key.size();
    std::copy(key.begin(), key.end(), l.begin());
    for (std::size_t i = t; i < 128; ++i) l[i] = kPiTable[static_cast<std::uint8_t>(l[i - 1] + l[i - t])];

    const int t8 = (effective_bits + 7) / 8;
    const std::uint8_t tm = static_cast<std::uint8_t>(255 % (1 << (8 + effective_bits - 8 * t8)));
    l[128 - t8] = kPiTable[l[128 - t8] & tm];
    for (int i = 127 - t8; i >= 0; --i) l[i] = kPiTable[l[i + 1] ^ l[i + t8]];

    for (int i = 0; i < 64; ++i) k_[i] = static_cast<std::uint16_t>(l[2 * i] | (l[2 * i + 1] << 8));
}

void Rc2::encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint16_t r0 = detail::load_le16(in);
    std::uint16_t r1 = detail::load_le16(in + 2);
    std::uint16_t r2 = detail::load_le16(in + 4);
    std::uint16_t r3 = detail::load_le16(in + 6);
    int j = 0;

    auto mix = [&] {
        r0 = rotl16(static_cast<std::uint16_t>(r0 + k_[j++] + (r3 & r2) + (~r3 & r1)), 1);
        r1 = rotl16(static_cast<std::uint16_t>(r1 + k_[j++] + (r0 & r3) + (~r0 & r2)), 2);
        r2 = rotl16(static_cast<std::uint16_t>(r2 + k_[j++] + (r1 & r0) + (~r1 & r3)), 3);
        r3 = rotl16(static_cast<std::uint16_t>(r3 + k_[j++] + (r2 & r1) + (~r2 & r0)), 5);
    };
    auto mash = [&] {
        r0 = static_cast<std::uint16_t>(r0 + k_[r3 & 63]);
        r1 = static_cast<std::uint16_t>(r1 + k_[r0 & 63]);
        r2 = static_cast<std::uint16_t>(r2 + k_[r1 & 63]);
        r3 = static_cast<std::uint16_t>(r3 + k_[r2 & 63]);
    };

    for (int i = 0; i < 5; ++i) mix();
    mash();
    for (int i = 0; i < 6; ++i) mix();
    mash();
    for (int i = 0; i < 5; ++i) mix();

    detail::store_le16(out, r0);
    detail::store_le16(out + 2, r1);
    detail::store_le16(out + 4, r2);
    detail::store_le16(out + 6, r3);
}

void Rc2::decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint16_t r0 = detail::load_le16(in);
    std::uint16_t r1 = detail::load_le16(in + 2);
    std::uint16_t r2 = detail::load_le16(in + 4);
    std::uint16_t r3 = detail::load_le16(in + 6);
    int j = 63;

    auto rmix = [&] {
        r3 = static_cast<std::uint16_t>(rotr16(r3, 5) - k_[j--] - (r2 & r1) - (~r2 & r0));
        r2 = static_cast<std::uint16_t>(rotr16(r2, 3) - k_[j--] - (r1 & r0) - (~r1 & r3));
        r1 = static_cast<std::uint16_t>(rotr16(r1, 2) - k_[j--] - (r0 & r3) - (~r0 & r2));
        r0 = static_cast<std::uint16_t>(rotr16(r0, 1) - k_[j--] - (r3 & r2) - (~r3 & r1));
    };
    auto rmash = [&] {
        r3 = static_cast<std::uint16_t>(r3 - k_[r2 & 63]);
        r2 = static_cast<std::uint16_t>(r2 - k_[r1 & 63]);
        r1 = static_cast<std::uint16_t>(r1 - k_[r0 & 63]);
        r0 = static_cast<std::uint16_t>(r0 - k_[r3 & 63]);
    };

    for (int i = 0; i < 5; ++i) rmix();
    rmash();
    for (int i = 0; i < 6; ++i) rmix();
    rmash();
    for (int i = 0; i < 5; ++i) rmix();

    detail::store_le16(out, r0);
    detail::store_le16(out + 2, r1);
    detail::store_le16(out + 4, r2);
    detail::store_le16(out + 6, r3);
}

}  // namespace cipherselect::ciphers
