#include <doctest.h>

#include <bitset>
#include <random>

#include "cipherselect/error.hpp"
#include "cipherselect/kat.hpp"
#include "test_support.hpp"

using namespace cipherselect;
using namespace testsupport;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::BadArgument;
}

}  // namespace

TEST_CASE("every published known-answer vector passes") {
    const auto results = run_known_answer_tests();
    CHECK(results.size() == standard_vectors().size());
    for (const auto& r : results) {
        INFO(r.name, ": got ", r.actual_hex, " expected ", r.expected_hex);
        CHECK(r.passed);
    }
}

TEST_CASE("frozen single-block vectors") {
    auto enc = [](const auto& c, const std::string& pt) {
        const Bytes in = from_hex(pt);
        Bytes out(in.size());
        c.encrypt_block(in.data(), out.data());
        return to_hex(out);
    };
    CHECK(enc(ciphers::Aes(from_hex("000102030405060708090a0b0c0d0e0f")), "00112233445566778899aabbccddeeff") ==
          "69c4e0d86a7b0430d8cdb78070b4c55a");
    CHECK(enc(ciphers::Des(from_hex("133457799bbcdff1")), "0123456789abcdef") == "85e813540f0ab405");
    CHECK(enc(ciphers::Des(from_hex("0e329232ea6d0d73")), "8787878787878787") == "0000000000000000");
    CHECK(enc(ciphers::TripleDes(from_hex("0123456789abcdef23456789abcdef01456789abcdef0123")), "6bc1bee22e409f96") ==
          "714772f339841d34");
    CHECK(enc(ciphers::TripleDes(from_hex("0123456789abcdef23456789abcdef01")), "6bc1bee22e409f96") ==
          "06ede3d82884090a");
    CHECK(enc(ciphers::Rc2(from_hex("0000000000000000"), 63), "0000000000000000") == "ebb773f993278eff");
    CHECK(enc(ciphers::Rc2(from_hex("0102030405")), "0000000000000000") == "269b2c0070a1cb64");
    CHECK(enc(ciphers::Blowfish(from_hex("fedcba9876543210")), "0123456789abcdef") == "0aceab0fc6a0a28d");
    CHECK(enc(ciphers::Skipjack(from_hex("00998877665544332211")), "33221100ddccbbaa") == "2587cae27a12d300");
}

TEST_CASE("10000-step encryption chains touch every table entry") {
    for (const auto& v : chain_vectors()) {
        INFO(v.name);
        CHECK(chain_result(v) == v.final_block);
    }
}

TEST_CASE("DES round keys match the worked example") {
    const ciphers::Des des(from_hex("133457799bbcdff1"));
    const std::uint64_t expected[16] = {
        0x1b02effc7072, 0x79aed9dbc9e5, 0x55fc8a42cf99, 0x72add6db351d, 0x7cec07eb53a8, 0x63a53e507b2f,
        0xec84b7f618bc, 0xf78a3ac13bfb, 0xe0dbebede781, 0xb1f347ba464f, 0x215fd3ded386, 0x7571f59467e9,
        0x97c5d1faba41, 0x5f43b7f2e73a, 0xbf918d3d3f0a, 0xcb3d8b0e17f5,
    };
    for (int r = 0; r < 16; ++r) {
        INFO("round ", r + 1);
        CHECK(des.round_key(r) == expected[r]);
    }
    CHECK(code_of([&] { (void)des.round_key(16); }) == ErrorCode::BadArgument);
}

TEST_CASE("AES round count and first round key") {
    for (std::size_t n : {16u, 24u, 32u}) {
        const Bytes key = pattern_key(n);
        const ciphers::Aes aes(key);
        CHECK(aes.rounds() == static_cast<int>(n / 4 + 6));
        const auto rk0 = aes.round_key(0);
        CHECK(Bytes(rk0.begin(), rk0.end()) == Bytes(key.begin(), key.begin() + 16));
    }
    // FIPS-197 A.1: last word of the AES-128 expansion.
    const ciphers::Aes aes(from_hex("2b7e151628aed2a6abf7158809cf4f3c"));
    const auto last = aes.round_key(10);
    CHECK(to_hex(Bytes(last.begin(), last.end())) == "d014f9a8c9ee2589e13f0cc8b6630ca6");
}

TEST_CASE("RC4 keystream far into the stream and permutation invariant") {
    for (const auto& v : rc4_stream_vectors()) {
        INFO("key bytes ", v.key_len);
        ciphers::Rc4 rc4(pattern_key(v.key_len));
        Bytes stream(4112, 0);
        rc4.apply(stream, stream);
        CHECK(to_hex(ByteView(stream).subspan(4096)) == v.keystream_4096);
        std::bitset<256> seen;
        for (auto b : rc4.permutation()) seen.set(b);
        CHECK(seen.all());
        CHECK(rc4.i() == static_cast<std::uint8_t>(4112 % 256));
    }
}

TEST_CASE("roundtrip through the registry for every key-size class") {
    std::mt19937_64 rng(7);
    for (auto [id, bits] : key_size_classes()) {
        INFO(to_string(id), "-", bits);
        for (int i = 0; i < 50; ++i) {
            const KeyMaterial key = random_key(rng, id, bits);
            const CipherState state = make_cipher_state(key);
            if (state.is_stream()) {
                const Bytes msg = random_bytes(rng, 1 + rng() % 100);
                CipherState a = state;
                CipherState b = state;
                CHECK(rc4_apply(b, rc4_apply(a, msg)) == msg);
            } else {
                const Bytes block = random_bytes(rng, state.block_bytes());
                CHECK(decrypt_block(state, encrypt_block(state, block)) == block);
            }
        }
    }
}

TEST_CASE("TDES with K||K||K equals single DES") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Bytes k = random_bytes(rng, 8);
        Bytes k3 = k;
        k3.insert(k3.end(), k.begin(), k.end());
        k3.insert(k3.end(), k.begin(), k.end());
        const ciphers::Des des(k);
        const ciphers::TripleDes tdes(k3);
        const Bytes block = random_bytes(rng, 8);
        Bytes a(8);
        Bytes b(8);
        des.encrypt_block(block.data(), a.data());
        tdes.encrypt_block(block.data(), b.data());
        CHECK(a == b);
    }
}

TEST_CASE("encryption is deterministic and key-sensitive") {
    std::mt19937_64 rng(3);
    for (auto [id, bits] : key_size_classes()) {
        if (id == CipherId::RC4) continue;
        INFO(to_string(id), "-", bits);
        const KeyMaterial key = random_key(rng, id, bits);
        const CipherState s1 = make_cipher_state(key);
        const CipherState s2 = make_cipher_state(key);
        const Bytes block = random_bytes(rng, s1.block_bytes());
        const Bytes c1 = encrypt_block(s1, block);
        CHECK(c1 == encrypt_block(s2, block));

        // Avalanche: flipping one plaintext bit changes roughly half the output.
        double flipped = 0;
        const std::size_t nbits = block.size() * 8;
        for (std::size_t bit = 0; bit < nbits; ++bit) {
            Bytes p = block;
            p[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
            const Bytes c2 = encrypt_block(s1, p);
            for (std::size_t j = 0; j < c1.size(); ++j) flipped += std::bitset<8>(c1[j] ^ c2[j]).count();
        }
        CHECK(flipped / static_cast<double>(nbits * nbits) >= 0.25);
    }
}

TEST_CASE("registry matches the published parameters") {
    CHECK(cipher_info(CipherId::AES).block_size_bits == 128);
    CHECK(cipher_info(CipherId::AES).rounds == std::vector<int>{10, 12, 14});
    CHECK(cipher_info(CipherId::DES).key_sizes_bits.listed == std::vector<int>{56});
    CHECK(cipher_info(CipherId::TDES).rounds == std::vector<int>{48});
    CHECK(cipher_info(CipherId::RC2).key_sizes_bits.contains(40));
    CHECK(cipher_info(CipherId::RC2).key_sizes_bits.contains(1024));
    CHECK_FALSE(cipher_info(CipherId::RC2).key_sizes_bits.contains(1032));
    CHECK(cipher_info(CipherId::BLOWFISH).key_sizes_bits.maximum() == 448);
    CHECK(cipher_info(CipherId::RC4).type == CipherType::Stream);
    CHECK(cipher_info(CipherId::RC4).key_sizes_bits.maximum() == 2048);
    CHECK(cipher_info(CipherId::SKIPJACK).rounds == std::vector<int>{32});
    for (auto id : kAllCiphers) CHECK(cipher_info(id).id == id);

    CHECK(parse_cipher_id("aes") == CipherId::AES);
    CHECK(parse_cipher_id("3des") == CipherId::TDES);
    CHECK(parse_cipher_id("Triple-DES") == CipherId::TDES);
    CHECK_FALSE(parse_cipher_id("serpent").has_value());

    CHECK(key_bytes_for(CipherId::DES, 56) == 8);
    CHECK(key_bytes_for(CipherId::TDES, 112) == 16);
    CHECK(key_bytes_for(CipherId::TDES, 168) == 24);
    CHECK(key_bytes_for(CipherId::SKIPJACK, 80) == 10);
    CHECK(key_bytes_for(CipherId::RC4, 2048) == 256);
}

TEST_CASE("generated keys are reproducible per seed") {
    const auto a = KeyMaterial::generate(CipherId::AES, 256, 42);
    const auto b = KeyMaterial::generate(CipherId::AES, 256, 42);
    const auto c = KeyMaterial::generate(CipherId::AES, 256, 43);
    CHECK(a.key_bytes == b.key_bytes);
    CHECK(a.key_bytes != c.key_bytes);
    CHECK(a.key_bytes.size() == 32);
}

TEST_CASE("cipher error paths") {
    CHECK(code_of([] { key_bytes_for(CipherId::AES, 64); }) == ErrorCode::UnsupportedKeySize);
    CHECK(code_of([] { make_cipher_state({CipherId::DES, Bytes(7), 56}); }) == ErrorCode::MalformedKey);
    CHECK(code_of([] { make_cipher_state({CipherId::RC2, Bytes(4), 32}); }) == ErrorCode::UnsupportedKeySize);
    CHECK(code_of([] { ciphers::Aes(Bytes(20)); }) == ErrorCode::MalformedKey);
    CHECK(code_of([] { ciphers::Skipjack(Bytes(8)); }) == ErrorCode::MalformedKey);
    CHECK(code_of([] { ciphers::Blowfish(Bytes(57)); }) == ErrorCode::MalformedKey);
    CHECK(code_of([] { ciphers::Rc4(Bytes{}); }) == ErrorCode::MalformedKey);
    CHECK(code_of([] { ciphers::Rc2(Bytes(8), 0); }) == ErrorCode::UnsupportedKeySize);

    const CipherState aes = make_cipher_state(KeyMaterial::generate(CipherId::AES, 128, 1));
    CHECK(code_of([&] { encrypt_block(aes, Bytes(8)); }) == ErrorCode::WrongBlockLength);
    CipherState aes_copy = aes;
    CHECK(code_of([&] { rc4_apply(aes_copy, Bytes(8)); }) == ErrorCode::BlockCipherMisuse);

    const CipherState rc4 = make_cipher_state(KeyMaterial::generate(CipherId::RC4, 128, 1));
    CHECK(code_of([&] { encrypt_block(rc4, Bytes(8)); }) == ErrorCode::StreamCipherMisuse);
    CHECK(code_of([&] { decrypt_block(rc4, Bytes(8)); }) == ErrorCode::StreamCipherMisuse);

    CHECK(code_of([] { from_hex("abc"); }) == ErrorCode::BadArgument);
    CHECK(code_of([] { from_hex("zz"); }) == ErrorCode::BadArgument);
}
