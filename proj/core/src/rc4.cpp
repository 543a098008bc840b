#include "cipherselect/ciphers/rc4.hpp"

#include <numeric>
#include <utility>

#include "cipherselect/error.hpp"

namespace cipherselect::ciphers {

Rc4::Rc4(ByteView key) {
    if (key.empty() || key.size() > 256) throw Error(ErrorCode::MalformedKey, "RC4 key must be 1..256 bytes");
    std::iota(s_.begin(), s_.end(), std::uint8_t{0});
    std::uint8_t j = 0;
    for (std::size_t i = 0; i < 256; ++i) {
        j = static_cast<std::uint8_t>(j + s_[i] + key[i % key.size()]);
        std::swap(s_[i], s_[j]);
    }
}

void Rc4::apply(ByteView in, MutableByteView out) noexcept {
    std::uint8_t i = i_;
    std::uint8_t j = j_;
    const std::size_t n = in.size();
    for (std::size_t k = 0; k < n; ++k) {
        i = static_cast<std::uint8_t>(i + 1);
        const std::uint8_t si = s_[i];
        j = static_cast<std::uint8_t>(j + si);
        const std::uint8_t sj = s_[j];
        s_[i] = sj;
        s_[j] = si;
        out[k] = in[k] ^ s_[static_cast<std::uint8_t>(si + sj)];
    }
    i_ = i;
    j_ = j;
}

}  // namespace cipherselect::ciphers
