#include "cipherselect/mode.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cipherselect/error.hpp"

namespace cipherselect {

PaddedMessage pkcs_pad(ByteView data, std::size_t block_size_bytes) {
    if (block_size_bytes < 1 || block_size_bytes > 255) {
        throw Error(ErrorCode::BadBlockSize, "block size must be in 1..255, got " + std::to_string(block_size_bytes));
    }
    const std::size_t pad = block_size_bytes - data.size() % block_size_bytes;
    PaddedMessage msg{Bytes(data.begin(), data.end()), block_size_bytes};
    msg.body.insert(msg.body.end(), pad, static_cast<std::uint8_t>(pad));
    return msg;
}

namespace {

std::size_t checked_pad_length(ByteView body, std::size_t block) {
    if (block < 1 || block > 255) throw Error(ErrorCode::BadBlockSize, "block size must be in 1..255");
    if (body.empty() || body.size() % block != 0) {
        throw Error(ErrorCode::WrongLength, "padded body must be a positive multiple of the block size");
    }
    const std::size_t pad = body.back();
    if (pad < 1 || pad > block) throw Error(ErrorCode::CorruptPadding, "pad byte out of range");
    const bool consistent =
        std::all_of(body.end() - static_cast<std::ptrdiff_t>(pad), body.end(), [&](std::uint8_t b) { return b == pad; });
    if (!consistent) throw Error(ErrorCode::CorruptPadding, "pad bytes disagree with the final byte");
    return pad;
}

}  // namespace

Bytes pkcs_unpad(const PaddedMessage& msg) {
    const std::size_t pad = checked_pad_length(msg.body, msg.block_size_bytes);
    return Bytes(msg.body.begin(), msg.body.end() - static_cast<std::ptrdiff_t>(pad));
}

std::size_t ecb_ciphertext_size(const CipherState& state, std::size_t n) {
    if (state.is_stream()) return n;
    const std::size_t b = state.block_bytes();
    return (n / b + 1) * b;
}

void ecb_encrypt_into(CipherState& state, ByteView plaintext, Bytes& out) {
    out.resize(ecb_ciphertext_size(state, plaintext.size()));
    if (auto* rc4 = std::get_if<ciphers::Rc4>(&state.schedule())) {
        rc4->apply(plaintext, out);
        return;
    }
    // Whole blocks go straight from the input; only the tail is copied so
    // the padding can be appended without duplicating the message.
    const std::size_t b = state.block_bytes();
    const std::size_t whole = plaintext.size() - plaintext.size() % b;
    state.encrypt_blocks(plaintext.first(whole), MutableByteView(out).first(whole));

    std::array<std::uint8_t, 16> last{};
    const std::size_t tail = plaintext.size() - whole;
    std::copy(plaintext.begin() + static_cast<std::ptrdiff_t>(whole), plaintext.end(), last.begin());
    std::fill(last.begin() + static_cast<std::ptrdiff_t>(tail), last.begin() + static_cast<std::ptrdiff_t>(b),
              static_cast<std::uint8_t>(b - tail));
    state.encrypt_blocks(ByteView(last.data(), b), MutableByteView(out).subspan(whole, b));
}

Bytes ecb_encrypt(CipherState& state, ByteView plaintext) {
    Bytes out;
    ecb_encrypt_into(state, plaintext, out);
    return out;
}

Bytes ecb_decrypt(CipherState& state, ByteView ciphertext) {
    if (auto* rc4 = std::get_if<ciphers::Rc4>(&state.schedule())) {
        Bytes out(ciphertext.size());
        rc4->apply(ciphertext, out);
        return out;
    }
    const std::size_t b = state.block_bytes();
    if (ciphertext.empty() || ciphertext.size() % b != 0) {
        throw Error(ErrorCode::WrongLength, "ciphertext length " + std::to_string(ciphertext.size()) +
                                                " is not a positive multiple of " + std::to_string(b));
    }
    Bytes plain(ciphertext.size());
    state.decrypt_blocks(ciphertext, plain);
    const std::size_t pad = checked_pad_length(plain, b);
    plain.resize(plain.size() - pad);
    return plain;
}

}  // namespace cipherselect
