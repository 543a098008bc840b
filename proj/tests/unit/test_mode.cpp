#include <doctest.h>

#include <random>

#include "cipherselect/error.hpp"
#include "cipherselect/mode.hpp"
#include "test_support.hpp"

using namespace cipherselect;
using namespace testsupport;

TEST_CASE("PKCS padding examples") {
    SUBCASE("partial block") {
        const auto p = pkcs_pad(from_hex("0102030405"), 8);
        CHECK(to_hex(p.body) == "0102030405030303");
    }
    SUBCASE("aligned input gains a full block") {
        const auto p = pkcs_pad(Bytes(8, 0xaa), 8);
        CHECK(p.body.size() == 16);
        CHECK(to_hex(ByteView(p.body).subspan(8)) == "0808080808080808");
    }
    SUBCASE("empty input") {
        const auto p = pkcs_pad(Bytes{}, 16);
        CHECK(p.body == Bytes(16, 16));
        CHECK(pkcs_unpad(p).empty());
    }
}

TEST_CASE("padding length law and inverse") {
    std::mt19937_64 rng(5);
    for (std::size_t block : {1u, 8u, 16u, 255u}) {
        for (std::size_t n = 0; n < 70; ++n) {
            const Bytes m = random_bytes(rng, n);
            const auto p = pkcs_pad(m, block);
            CHECK(p.body.size() == (n / block + 1) * block);
            CHECK(pkcs_unpad(p) == m);
        }
    }
}

TEST_CASE("padding errors") {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::BadArgument;
    };
    CHECK(code([] { pkcs_pad(Bytes(3), 0); }) == ErrorCode::BadBlockSize);
    CHECK(code([] { pkcs_pad(Bytes(3), 256); }) == ErrorCode::BadBlockSize);
    CHECK(code([] { pkcs_unpad({Bytes(7, 1), 8}); }) == ErrorCode::WrongLength);
    CHECK(code([] { pkcs_unpad({Bytes{}, 8}); }) == ErrorCode::WrongLength);
    CHECK(code([] { pkcs_unpad({from_hex("0102030405060700"), 8}); }) == ErrorCode::CorruptPadding);
    CHECK(code([] { pkcs_unpad({from_hex("0102030405060709"), 8}); }) == ErrorCode::CorruptPadding);
    CHECK(code([] { pkcs_unpad({from_hex("0102030405020303"), 8}); }) == ErrorCode::CorruptPadding);
}

TEST_CASE("ECB encrypts blocks independently") {
    std::mt19937_64 rng(9);
    for (auto id : kAllCiphers) {
        if (id == CipherId::RC4) continue;
        INFO(to_string(id));
        CipherState s = make_cipher_state(KeyMaterial::generate(id, cipher_info(id).key_sizes_bits.minimum(), 2));
        const std::size_t b = s.block_bytes();
        const Bytes x = random_bytes(rng, b);
        const Bytes y = random_bytes(rng, b);
        Bytes xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        Bytes yx = y;
        yx.insert(yx.end(), x.begin(), x.end());
        const Bytes cxy = ecb_encrypt(s, xy);
        const Bytes cyx = ecb_encrypt(s, yx);
        // Swapping plaintext blocks swaps ciphertext blocks; the padding block is shared.
        CHECK(Bytes(cxy.begin(), cxy.begin() + b) == Bytes(cyx.begin() + b, cyx.begin() + 2 * b));
        CHECK(Bytes(cxy.begin() + b, cxy.begin() + 2 * b) == Bytes(cyx.begin(), cyx.begin() + b));
        CHECK(Bytes(cxy.begin() + 2 * b, cxy.end()) == Bytes(cyx.begin() + 2 * b, cyx.end()));
        CHECK(Bytes(cxy.begin(), cxy.begin() + b) == encrypt_block(s, x));
    }
}

TEST_CASE("ECB roundtrip matrix across ciphers, keys and lengths") {
    std::mt19937_64 rng(21);
    for (auto [id, bits] : key_size_classes()) {
        INFO(to_string(id), "-", bits);
        const KeyMaterial key = random_key(rng, id, bits);
        for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 100u, 4096u}) {
            CipherState enc = make_cipher_state(key);
            CipherState dec = make_cipher_state(key);
            const Bytes m = random_bytes(rng, n);
            const Bytes c = ecb_encrypt(enc, m);
            CHECK(c.size() == ecb_ciphertext_size(enc, n));
            CHECK(ecb_decrypt(dec, c) == m);
        }
    }
}

TEST_CASE("ecb_encrypt_into matches ecb_encrypt and reuses capacity") {
    CipherState s = make_cipher_state(KeyMaterial::generate(CipherId::BLOWFISH, 128, 4));
    std::mt19937_64 rng(1);
    const Bytes m = random_bytes(rng, 1000);
    Bytes out;
    out.reserve(2048);
    const auto* data = out.data();
    ecb_encrypt_into(s, m, out);
    CHECK(out == ecb_encrypt(s, m));
    CHECK(out.data() == data);
}

TEST_CASE("ECB decrypt rejects bad ciphertext") {
    CipherState s = make_cipher_state(KeyMaterial::generate(CipherId::AES, 128, 4));
    auto code = [&](const Bytes& c) {
        try {
            ecb_decrypt(s, c);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::BadArgument;
    };
    CHECK(code(Bytes(15)) == ErrorCode::WrongLength);
    CHECK(code(Bytes{}) == ErrorCode::WrongLength);
    // Tampering scrambles the final block; with this fixed key its trailer is invalid.
    Bytes c = ecb_encrypt(s, Bytes(16, 1));
    c.back() ^= 0x80;
    CHECK(code(c) == ErrorCode::CorruptPadding);
}
