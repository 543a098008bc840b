#pragma once

#include <cstddef>

#include "cipherselect/bytes.hpp"
#include "cipherselect/cipher.hpp"

namespace cipherselect {

/// Output of pkcs_pad. pkcs_unpad re-validates the trailer, so a
/// PaddedMessage built by hand from untrusted bytes is fine to pass in.
struct PaddedMessage {
    Bytes body;
    std::size_t block_size_bytes = 0;
};

/// PKCS#7 padding (PKCS#5 when the block is 8 bytes): appends p copies of
/// the byte p, 1 <= p <= block size. Throws Error(BadBlockSize) unless
/// 1 <= block_size_bytes <= 255.
PaddedMessage pkcs_pad(ByteView data, std::size_t block_size_bytes);

/// Throws Error(CorruptPadding) when the trailer is inconsistent and
/// Error(WrongLength) when the body is not a positive multiple of the block.
Bytes pkcs_unpad(const PaddedMessage& msg);

/// ECB with PKCS padding for block ciphers; plain rc4_apply for RC4, which
/// is why the state is taken by mutable reference.
Bytes ecb_encrypt(CipherState& state, ByteView plaintext);
Bytes ecb_decrypt(CipherState& state, ByteView ciphertext);

/// Same as ecb_encrypt but writes into `out`, resizing it to the ciphertext
/// length. Reuses out's capacity, so repeated calls do not allocate.
void ecb_encrypt_into(CipherState& state, ByteView plaintext, Bytes& out);

/// Ciphertext length for a plaintext of n bytes: (n / B + 1) * B for block
/// ciphers, n for the stream cipher.
std::size_t ecb_ciphertext_size(const CipherState& state, std::size_t n);

}  // namespace cipherselect
