#include "cipherselect/ciphers/blowfish.hpp"

#include "cipherselect/error.hpp"

namespace cipherselect::ciphers {

namespace {

#include "blowfish_tables.inc"

}  // namespace

Blowfish::Blowfish(ByteView key) {
    if (key.empty() || key.size() > 56) throw Error(ErrorCode::MalformedKey, "Blowfish key must be 1..56 bytes");

    std::copy(std::begin(kInitP), std::end(kInitP), p_.begin());
    std::copy(std::begin(kInitS0), std::end(kInitS0), s_[0].begin());
    std::copy(std::begin(kInitS1), std::end(kInitS1), s_[1].begin());
    std::copy(std::begin(kInitS2), std::end(kInitS2), s_[2].begin());
    std::copy(std::begin(kInitS3), std::end(kInitS3), s_[3].begin());

    std::size_t pos = 0;
    for (auto& p : p_) {
        std::uint32_t word = 0;
        for (int b = 0; b < 4; ++b) {
            word = (word << 8) | key[pos];
            pos = (pos + 1) % key.size();
        }
        p ^= word;
    }

    std::uint32_t l = 0;
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < p_.size(); i += 2) {
        encrypt_words(l, r);
        p_[i] = l;
        p_[i + 1] = r;
    }
    for (auto& box : s_) {
        for (std::size_t i = 0; i < box.size(); i += 2) {
            encrypt_words(l, r);
            box[i] = l;
            box[i + 1] = r;
        }
    }
}

inline std::uint32_t Blowfish::f(std::uint32_t x) const noexcept {
    return ((s_[0][x >> 24] + s_[1][(x >> 16) & 0xff]) ^ s_[2][(x >> 8) & 0xff]) + s_[3][x & 0xff];
}

void Blowfish::encrypt_words(std::uint32_t& l, std::uint32_t& r) const noexcept {
    for (int i = 0; i < 16; i += 2) {
        l ^= p_[i];
        r ^= f(l);
        r ^= p_[i + 1];
        l ^= f(r);
    }
    l ^= p_[16];
    r ^= p_[17];
    std::swap(l, r);
}

void Blowfish::encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint32_t l = detail::load_be32(in);
    std::uint32_t r = detail::load_be32(in + 4);
    encrypt_words(l, r);
    detail::store_be32(out, l);
    detail::store_be32(out + 4, r);
}

void Blowfish::decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint32_t l = detail::load_be32(in);
    std::uint32_t r = detail::load_be32(in + 4);
    for (int i = 17; i > 1; i -= 2) {
        l ^= p_[i];
        r ^= f(l);
        r ^= p_[i - 1];
        l ^= f(r);
    }
    l ^= p_[1];
    r ^= p_[0];
    detail::store_be32(out, r);
    detail::store_be32(out + 4, l);
}

}  // namespace cipherselect::ciphers
