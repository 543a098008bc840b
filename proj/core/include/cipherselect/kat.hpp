#pragma once

#include <string>
#include <vector>

#include "cipherselect/cipher.hpp"

namespace cipherselect {

/// A published known-answer vector. For block ciphers `input` is one block;
/// for RC4 it is the plaintext of the whole message.
struct KnownAnswer {
    std::string name;
    CipherId cipher;
    std::string key_hex;
    std::string input_hex;
    std::string expected_hex;
    int rc2_effective_bits = 0;  // 0: equal to the key length in bits
};

/// FIPS-197 (AES), the classic FIPS 46 worked example (DES), RFC 2268
/// (RC2), Schneier's Blowfish set, the declassified Skipjack vector and the
/// common RC4 vectors, plus TDES vectors checked against OpenSSL.
const std::vector<KnownAnswer>& standard_vectors();

struct KatResult {
    std::string name;
    bool passed = false;
    std::string actual_hex;
    std::string expected_hex;
};

/// Runs the vector through the cipher primitive directly, encrypting and
/// (for block ciphers) decrypting back.
KatResult run_known_answer(const KnownAnswer& vec);
std::vector<KatResult> run_known_answer_tests();

}  // namespace cipherselect
